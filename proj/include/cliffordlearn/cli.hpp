// Copyright 2026 The cliffordlearn Authors
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

#pragma once

#include <string>
#include <vector>

namespace cliffordlearn::cli {

// Dispatches the command line. Exit status: 0 when every emitted record
// passes, 1 when any bound check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace cliffordlearn::cli
