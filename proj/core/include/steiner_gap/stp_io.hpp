// Copyright 2026 The steiner_gap Authors
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


#ifndef STEINER_GAP_STP_IO_HPP_
#define STEINER_GAP_STP_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "steiner_gap/graph.hpp"

namespace steiner_gap {

class StpParseError : public std::runtime_error {
 public:
  StpParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// SteinLib-style text: "SECTION Graph" with Nodes/Edges counts and "E u v c"
// lines (1-based vertices, integer costs), "SECTION Terminals" with "T v"
// lines. Non-integer costs use the extension line "ER u v num den". The
// instance name goes into "SECTION Comment" as Name "...". Labels are not
// part of the format.
std::string write_stp(const SteinerInstance& inst);
// Throws StpParseError on malformed input and InstanceError on an invalid
// instance (for example a disconnected graph).
SteinerInstance read_stp(std::string_view text);

void write_stp_file(const SteinerInstance& inst, const std::string& path);
SteinerInstance read_stp_file(const std::string& path);

}  // namespace steiner_gap

#endif  // STEINER_GAP_STP_IO_HPP_
