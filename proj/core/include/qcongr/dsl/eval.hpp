#pragma once

#include <map>
#include <string>

#include "qcongr/dsl/ast.hpp"
#include "qcongr/qspecial.hpp"
#include "qcongr/rat_func.hpp"

namespace qcongr::dsl {

using Binding = std::map<std::string, long>;

/// Exact value of e under the binding. Exponents, sum bounds and the
/// arguments of qbin, qint, qpoch and cyc must evaluate to integers.
RatFunc eval(const Expr& e, const Binding& binding, QObjectCache& cache = QObjectCache::shared());

/// The modulus as a cyclotomic factorization: cyc(e)^k gives {e: k} and
/// qint(e)^k gives {d: k} for every divisor d > 1 of e.
FactoredModulus eval_modulus(const Statement& s, const Binding& binding,
                             QObjectCache& cache = QObjectCache::shared());

struct ElaboratedStatement {
  RatFunc lhs;
  RatFunc rhs;
  FactoredModulus modulus;
};

ElaboratedStatement elaborate(const Statement& s, const Binding& binding,
                              QObjectCache& cache = QObjectCache::shared());

}  // namespace qcongr::dsl
