// Copyright 2026 The qudit-transfer Authors
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

// Schedule document:
//   {"format": "qst-schedule", "version": 1, "d": 3,
//    "segments": [{"type": "cavity_interaction", "duration_s": ...},
//                 {"type": "pulse_pair", "level": 2, "phase1_rad": ..., "phase2_rad": ...,
//                  "duration_s": ...},
//                 {"type": "decouple"},
//                 {"type": "single_pulse", "qudit": 2, "level": 1, "phase_rad": ...,
//                  "duration_s": ...}, ...]}

#include <cmath>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qst/protocol.hpp"

namespace qst {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "qst-schedule";

double duration_field(const json& j) {
  const double t = j.at("duration_s").get<double>();
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("segment duration must be finite and non-negative");
  }
  return t;
}

int level_field(const json& j, int d) {
  const int level = j.at("level").get<int>();
  if (level < 1 || level > d - 1) {
    throw std::invalid_argument("segment level " + std::to_string(level) + " out of range");
  }
  return level;
}

}  // namespace

std::string schedule_to_json(const Schedule& s) {
  json segments = json::array();
  for (const auto& segment : s.segments) {
    if (const auto* c = std::get_if<CavityInteraction>(&segment)) {
      segments.push_back({{"type", "cavity_interaction"}, {"duration_s", c->duration}});
    } else if (const auto* p = std::get_if<PulsePair>(&segment)) {
      segments.push_back({{"type", "pulse_pair"},
                          {"level", p->level},
                          {"phase1_rad", p->phase1},
                          {"phase2_rad", p->phase2},
                          {"duration_s", p->duration}});
    } else if (const auto* q = std::get_if<SinglePulse>(&segment)) {
      segments.push_back({{"type", "single_pulse"},
                          {"qudit", q->qudit == Site::Qudit1 ? 1 : 2},
                          {"level", q->level},
                          {"phase_rad", q->phase},
                          {"duration_s", q->duration}});
    } else {
      segments.push_back({{"type", "decouple"}});
    }
  }
  json doc = {{"format", kFormat}, {"version", 1}, {"d", s.d}, {"segments", segments}};
  return doc.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("schedule is not valid JSON: ") + e.what());
  }
  try {
    if (doc.value("format", std::string{}) != kFormat) {
      throw std::invalid_argument("not a qst-schedule document");
    }
    Schedule s;
    s.d = doc.at("d").get<int>();
    if (s.d < 2) {
      throw std::invalid_argument("schedule dimension must be at least 2");
    }
    for (const auto& j : doc.at("segments")) {
      const auto type = j.at("type").get<std::string>();
      if (type == "cavity_interaction") {
        s.segments.emplace_back(CavityInteraction{duration_field(j)});
      } else if (type == "pulse_pair") {
        s.segments.emplace_back(PulsePair{level_field(j, s.d), j.at("phase1_rad").get<double>(),
                                          j.at("phase2_rad").get<double>(), duration_field(j)});
      } else if (type == "single_pulse") {
        const int qudit = j.at("qudit").get<int>();
        if (qudit != 1 && qudit != 2) {
          throw std::invalid_argument("single_pulse qudit must be 1 or 2");
        }
        s.segments.emplace_back(SinglePulse{qudit == 1 ? Site::Qudit1 : Site::Qudit2,
                                            level_field(j, s.d), j.at("phase_rad").get<double>(),
                                            duration_field(j)});
      } else if (type == "decouple") {
        s.segments.emplace_back(Decouple{});
      } else {
        throw std::invalid_argument("unknown segment type '" + type + "'");
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed schedule: ") + e.what());
  }
}

}  // namespace qst
