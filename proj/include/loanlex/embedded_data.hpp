// Copyright (c) 2026 The loanlex Authors
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

#ifndef LOANLEX_EMBEDDED_DATA_HPP_
#define LOANLEX_EMBEDDED_DATA_HPP_

#include <string_view>

// Copies of the files under data/ compiled into the library.
namespace loanlex::embedded {

std::string_view default_rules();             // fr_darija.rules
std::string_view default_buckwalter_table();  // buckwalter_safe.tsv
std::string_view default_stoplist();          // stopwords_ar.txt

}  // namespace loanlex::embedded

#endif  // LOANLEX_EMBEDDED_DATA_HPP_
