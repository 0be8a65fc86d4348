// Copyright 2026 The mdrkit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace mdr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct ImaginaryResidual : Error {
    using Error::Error;
};

struct NegativeVariance : Error {
    using Error::Error;
};

struct InvalidState : Error {
    using Error::Error;
};

struct SpectrumMismatch : Error {
    using Error::Error;
};

struct NegativeMoment : Error {
    using Error::Error;
};

struct ZeroMarginal : Error {
    using Error::Error;
};

struct StrengthTooSmall : Error {
    using Error::Error;
};

struct IOFailure : Error {
    using Error::Error;
};

}  // namespace mdr
