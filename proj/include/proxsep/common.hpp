// include/proxsep/common.hpp

// Copyright 2026 The proximity-sep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROXSEP_COMMON_HPP_
#define PROXSEP_COMMON_HPP_

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace proxsep {

using Scalar = double;
using Complex = std::complex<Scalar>;

using ArrayX = Eigen::ArrayX<Scalar>;
using ArrayXX = Eigen::ArrayXX<Scalar>;
using ArrayXc = Eigen::ArrayX<Complex>;
using ArrayXXc = Eigen::ArrayXX<Complex>;
using MatrixX = Eigen::MatrixX<Scalar>;
using VectorX = Eigen::VectorX<Scalar>;
using Vec3 = Eigen::Vector3d;

// A mono signal with its sample rate.
struct Waveform {
  ArrayX samples;
  Scalar sample_rate = 16000.0;
};

// Error taxonomy shared across modules.  Every failure a caller can act on
// throws one of these; plain std::invalid_argument is reserved for contract
// violations (bad config fields, impossible shapes at construction).
struct ProxsepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PROXSEP_DEFINE_ERROR(NAME)                     \
  struct NAME : ProxsepError {                         \
    using ProxsepError::ProxsepError;                  \
  }

PROXSEP_DEFINE_ERROR(RejectionExhausted);
PROXSEP_DEFINE_ERROR(Starvation);
PROXSEP_DEFINE_ERROR(DegenerateGeometry);
PROXSEP_DEFINE_ERROR(SilentImpulse);
PROXSEP_DEFINE_ERROR(InsufficientDecay);
PROXSEP_DEFINE_ERROR(ShapeMismatch);
PROXSEP_DEFINE_ERROR(SampleRateMismatch);
PROXSEP_DEFINE_ERROR(CorpusExhausted);
PROXSEP_DEFINE_ERROR(NonFiniteLoss);
PROXSEP_DEFINE_ERROR(SilentReference);
PROXSEP_DEFINE_ERROR(SilentMixture);
PROXSEP_DEFINE_ERROR(MissingEstimate);
PROXSEP_DEFINE_ERROR(IoError);

#undef PROXSEP_DEFINE_ERROR

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace proxsep

#endif  // PROXSEP_COMMON_HPP_
