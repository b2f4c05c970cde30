// Copyright 2026 The gfgen Authors.
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

#ifndef GFGEN_MORPHOLOGY_H_
#define GFGEN_MORPHOLOGY_H_

#include <string>
#include <string_view>

namespace gfgen {

// English morphology heuristics. Multiword lemmas inflect their final word
// ("board game" -> "board games"); verb lemmas joined by '_' inflect their
// final segment ("has_pet" -> "has_pets").

// Plural of a noun lemma. A capitalized final word is a proper name and is
// returned unchanged.
std::string pluralize_noun(std::string_view lemma);

// Third person singular present.
std::string inflect_verb_3sg(std::string_view lemma);

std::string past_tense(std::string_view lemma);
std::string past_participle(std::string_view lemma);
std::string present_participle(std::string_view lemma);

// Lemma guesses for tokens whose LEMMA column is empty.
std::string singularize_noun(std::string_view plural);
std::string verb_lemma_from_3sg(std::string_view form);

}  // namespace gfgen

#endif  // GFGEN_MORPHOLOGY_H_
