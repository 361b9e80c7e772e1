// Copyright 2026 The gmc Authors.
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


#ifndef GMC_IO_HPP
#define GMC_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gmc/dynamics.hpp"

namespace gmc {

enum class Form { kf, ev, lf, ev_gen };

// "kf", "ev", "lf", "ev-gen".
std::string_view to_string(Form f);
std::optional<Form> form_from_string(std::string_view s);

inline constexpr std::string_view kFormatVersion = "1.0";

// On-disk document:
//   {"format_version": "1.0", "n": 3, "form": "kf",
//    "coefficients": [[...], [...], [...]], "metadata": {...}}
// coefficients is row-major; metadata is optional and free-form.
struct ChannelFile {
  std::string format_version{kFormatVersion};
  Form form = Form::kf;
  RealTable coefficients;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

  int n() const noexcept { return static_cast<int>(coefficients.rows()); }
};

using AnyObject = std::variant<KrausChannel, EigenChannel, LindbladGenerator, EigenGenerator>;

struct Loaded {
  ChannelFile file;
  AnyObject object;
  std::vector<std::string> warnings;
};

// Errors:
//   ParseError    malformed document; message carries line and column
//   SchemaError   missing, mistyped or mis-shaped fields
//   InvariantError (EntryError) a negative Kraus coefficient or a
//                 non-finite entry, naming the entry
ChannelFile parse_channel_file(std::string_view text, std::string_view source = "<input>");
Loaded to_object(ChannelFile file);
Loaded load(const std::filesystem::path& path);
Loaded load_text(std::string_view text, std::string_view source = "<input>");

// Coefficients are written with 17 significant digits, so load(save(x))
// reproduces every double exactly.
std::string render(const ChannelFile& file);
ChannelFile to_file(const AnyObject& obj,
                    nlohmann::ordered_json metadata = nlohmann::ordered_json::object());
void save(const std::filesystem::path& path, const ChannelFile& file);

// Density matrix document:
//   {"format_version": "1.0", "n": 2, "rho_real": [[...]], "rho_imag": [[...]]}
// rho_imag may be omitted for real states.
DensityMatrix parse_state(std::string_view text, std::string_view source = "<input>");
DensityMatrix load_state(const std::filesystem::path& path);
std::string render_state(const DensityMatrix& rho);

// Scalar profile from a command-line spec:
//   constant | const:c | exp:a | exp:c,a | poly:c0,c1,... | table:t0:y0,t1:y1,...
// "constant" is the constant 1; "exp:a" is e^{-a t}. Throws ParseError.
RateProfile parse_profile(std::string_view spec);

// %.17g
std::string format_double(double x);

std::string read_text(const std::filesystem::path& path);

}  // namespace gmc

#endif  // GMC_IO_HPP
