// Copyright 2026 The duality_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DLAB_ERRORS_HPP
#define DLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlab {

/// Base class for every error thrown by the library.
struct Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : Error {
    using Error::Error;
};
struct NonHermitianInput : Error {
    using Error::Error;
};
struct NormError : Error {
    using Error::Error;
};
struct InvalidDensity : Error {
    using Error::Error;
};
struct MissingArgument : Error {
    using Error::Error;
};
struct UnexpectedArgument : Error {
    using Error::Error;
};
struct UnknownCase : Error {
    using Error::Error;
};
struct InvalidAxis : Error {
    using Error::Error;
};
struct UnknownFigure : Error {
    using Error::Error;
};

}  // namespace dlab

#endif
