// Copyright 2026 The Monoscope Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace monoscope {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define MONOSCOPE_DEFINE_ERROR(NAME)                                           \
    class NAME : public Error {                                                \
      public:                                                                  \
        using Error::Error;                                                    \
    }

MONOSCOPE_DEFINE_ERROR(IndexOutOfRange);
MONOSCOPE_DEFINE_ERROR(EmptyKeepSet);
MONOSCOPE_DEFINE_ERROR(NotHermitian);
MONOSCOPE_DEFINE_ERROR(NotPositiveSemidefinite);
MONOSCOPE_DEFINE_ERROR(TooManyQubits);
MONOSCOPE_DEFINE_ERROR(NotTwoQubit);
MONOSCOPE_DEFINE_ERROR(OptimizerDiverged);
MONOSCOPE_DEFINE_ERROR(InvalidExcitation);
MONOSCOPE_DEFINE_ERROR(InvalidAmplitudes);
MONOSCOPE_DEFINE_ERROR(OddChainLength);
MONOSCOPE_DEFINE_ERROR(NonIntegerOccupation);
MONOSCOPE_DEFINE_ERROR(ChainTooShort);
MONOSCOPE_DEFINE_ERROR(WrongParamCount);
MONOSCOPE_DEFINE_ERROR(NegativeRealPart);
MONOSCOPE_DEFINE_ERROR(BetaUnavailable);
MONOSCOPE_DEFINE_ERROR(InvalidBipartition);
MONOSCOPE_DEFINE_ERROR(InvalidStateFile);
MONOSCOPE_DEFINE_ERROR(OutOfRange);

#undef MONOSCOPE_DEFINE_ERROR

} // namespace monoscope
