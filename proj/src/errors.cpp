// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "spinpacket/errors.hpp"

namespace spinpacket {

const char* validation_failure_name(ValidationFailure kind) {
    switch (kind) {
        case ValidationFailure::NotPrimePower: return "NotPrimePower";
        case ValidationFailure::BadDegree: return "BadDegree";
        case ValidationFailure::NotMonic: return "NotMonic";
        case ValidationFailure::FunctionalEquationFailed: return "FunctionalEquationFailed";
        case ValidationFailure::RootsOffWeilCircle: return "RootsOffWeilCircle";
    }
    return "Unknown";
}

}  // namespace spinpacket
