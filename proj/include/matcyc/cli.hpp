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

#ifndef MATCYC_CLI_HPP_
#define MATCYC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace matcyc {

// `args` excludes the program name. Returns 0 ok, 1 analysis failure,
// 2 usage or parse error, 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace matcyc

#endif  // MATCYC_CLI_HPP_
