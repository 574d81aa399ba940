// Copyright 2026 The quadsim Authors
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

#include "quadsim/error.hpp"

namespace quadsim {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::Mode: return "mode";
    case ErrorKind::Registry: return "registry";
    case ErrorKind::DegenerateState: return "degenerate-state";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Encoding: return "encoding";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Partition: return "partition";
  }
  return "unknown";
}

}  // namespace quadsim
