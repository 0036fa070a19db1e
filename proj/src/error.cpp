// Copyright 2026 The mpsperm Authors
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

#include "mpsperm/error.hpp"

namespace mpsperm {

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Format:
        case ErrorKind::Length:
            return 2;
        case ErrorKind::Degenerate:
            return 3;
        case ErrorKind::Io:
            return 4;
        case ErrorKind::InvalidInput:
            break;
    }
    return 1;
}

const char *to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput:
            return "invalid input";
        case ErrorKind::Format:
            return "format error";
        case ErrorKind::Length:
            return "length error";
        case ErrorKind::Degenerate:
            return "degenerate input";
        case ErrorKind::Io:
            return "I/O error";
    }
    return "error";
}

}  // namespace mpsperm
