// Copyright 2026 The cs3 Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace cs3::cli {

/// Exit codes: 0 success / semantic "true", 1 semantic "false" (e.g.
/// inequivalence, non-membership), 2 usage error, 3 internal verification
/// failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cs3::cli
