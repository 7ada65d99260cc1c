// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_ERRORS_HPP
#define COSSERAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cosserat {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tensor expected to be skew-symmetric has a symmetric part above tolerance.
struct NotSkew : Error {
  using Error::Error;
};

/// A tensor expected to be a rotation fails orthogonality or has det <= 0.
struct NotRotation : Error {
  using Error::Error;
};

/// Grid has fewer than three points per axis; stencils are undefined.
struct GridTooCoarse : Error {
  using Error::Error;
};

/// R^t dR/dX_C acquired a symmetric part above tolerance; the sampled field
/// is not a rotation field or the grid is too coarse to resolve it.
struct SkewnessViolated : Error {
  using Error::Error;
};

struct InvalidFace : Error {
  using Error::Error;
};

/// Zero vector passed where a direction is required.
struct ZeroDirection : Error {
  using Error::Error;
};

/// Variation fields are nonzero on a face where they are declared assigned.
struct InadmissiblePair : Error {
  using Error::Error;
};

/// Orthogonality drift of an integrated rotation trajectory above tolerance.
struct DriftExceeded : Error {
  using Error::Error;
};

/// Support of the probe bump function leaves the interior of the domain.
struct ProbeOutsideDomain : Error {
  using Error::Error;
};

/// Malformed or schema-violating configuration input.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cosserat

#endif  // COSSERAT_ERRORS_HPP
