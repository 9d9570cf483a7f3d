#pragma once

#include <Eigen/Core>

#include "conecert/exact_complex.hpp"

namespace Eigen {

// ExactComplex is registered as a plain field scalar (IsComplex = 0):
// Eigen sees an exact commutative field and is used for storage, sums and
// products only. Conjugation is always explicit in conecert code.
template <>
struct NumTraits<conecert::ExactComplex> {
    using Real = conecert::ExactComplex;
    using NonInteger = conecert::ExactComplex;
    using Literal = conecert::ExactComplex;
    using Nested = conecert::ExactComplex;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };

    static inline Real epsilon() { return conecert::ExactComplex(0); }
    static inline Real dummy_precision() { return conecert::ExactComplex(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace conecert {

using ExactMatrix = Eigen::Matrix<ExactComplex, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<ExactComplex, Eigen::Dynamic, 1>;

}  // namespace conecert
