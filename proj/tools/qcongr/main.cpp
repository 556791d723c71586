#include <iostream>

#include "qcongr/cli/app.hpp"

int main(int argc, char** argv) { return qcongr::cli::run(argc, argv, std::cout, std::cerr); }
