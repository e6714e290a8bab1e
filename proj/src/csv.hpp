// Copyright 2026 the actemb authors
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

#include <string>
#include <string_view>
#include <vector>

// Minimal RFC 4180 reader/writer.
namespace actemb::csv {

/// Splits `text` into records. Accepts LF or CRLF, skips a UTF-8 BOM and blank
/// lines. Throws Error(Format) on an unterminated quoted field.
std::vector<std::vector<std::string>> parse(std::string_view text);

/// Quotes a field if it contains a comma, quote, CR or LF.
std::string quote(std::string_view field);

}  // namespace actemb::csv
