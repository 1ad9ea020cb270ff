// Copyright 2026 The Authors.
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

#ifndef SUBSEC_CLI_HPP_
#define SUBSEC_CLI_HPP_

#include <string>
#include <vector>

namespace subsec {

// Exit codes: 0 success, 1 input/usage error, 2 check failure.
int cli_main(const std::vector<std::string>& args);

}  // namespace subsec

#endif  // SUBSEC_CLI_HPP_
