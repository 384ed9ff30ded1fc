#pragma once

#include <Eigen/Core>

#include "flex/eps_scalar.hpp"
#include "flex/external.hpp"
#include "flex/neutrix.hpp"

namespace Eigen {

template <>
struct NumTraits<flex::EpsScalar> : GenericNumTraits<flex::EpsScalar> {
  using Real = flex::EpsScalar;
  using NonInteger = flex::EpsScalar;
  using Nested = flex::EpsScalar;
  using Literal = flex::EpsScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20,
  };
  static inline int digits10() { return 0; }
  static inline flex::EpsScalar epsilon() { return flex::EpsScalar(); }
  static inline flex::EpsScalar dummy_precision() { return flex::EpsScalar(); }
};

template <>
struct NumTraits<flex::ExternalScalar> : GenericNumTraits<flex::ExternalScalar> {
  using Real = flex::ExternalScalar;
  using NonInteger = flex::ExternalScalar;
  using Nested = flex::ExternalScalar;
  using Literal = flex::ExternalScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20,
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<flex::Neutrix> : GenericNumTraits<flex::Neutrix> {
  using Real = flex::Neutrix;
  using NonInteger = flex::Neutrix;
  using Nested = flex::Neutrix;
  using Literal = flex::Neutrix;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace flex {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using EpsMatrix = Mat<EpsScalar>;
using EpsVector = Vec<EpsScalar>;
using ExternalMatrix = Mat<ExternalScalar>;
using ExternalVector = Vec<ExternalScalar>;
using NeutrixMatrix = Mat<Neutrix>;
using NeutrixVector = Vec<Neutrix>;

}  // namespace flex
