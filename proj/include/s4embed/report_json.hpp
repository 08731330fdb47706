#pragma once

#include "s4embed/classifier.hpp"

#include <json.hpp>

#include <string>

namespace s4embed {

nlohmann::ordered_json certificate_to_json(const Certificate& c);
nlohmann::ordered_json report_to_json(const ObstructionReport& r, bool certificates);
std::string report_to_text(const ObstructionReport& r, bool certificates);

}  // namespace s4embed
