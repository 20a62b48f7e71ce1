#pragma once

#include <string_view>

// Data files compiled into the library from data/.
namespace obsharm::bundled {

std::string_view color_lexicon();
std::string_view gazetteer();

} // namespace obsharm::bundled
