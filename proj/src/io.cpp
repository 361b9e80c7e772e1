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


#include "gmc/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace gmc {

using nlohmann::ordered_json;

std::string_view to_string(Form f) {
  switch (f) {
    case Form::kf: return "kf";
    case Form::ev: return "ev";
    case Form::lf: return "lf";
    case Form::ev_gen: return "ev-gen";
  }
  return "unknown";
}

std::optional<Form> form_from_string(std::string_view s) {
  for (Form f : {Form::kf, Form::ev, Form::lf, Form::ev_gen})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, fmt::format("{}: cannot open file", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

ordered_json parse_json(std::string_view text, std::string_view source) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string detail = e.what();
    if (const auto p = detail.find("parse error"); p != std::string::npos) detail = detail.substr(p);
    throw Error(ErrorKind::ParseError, fmt::format("{}:{}:{}: {}", source, line, col, detail));
  }
}

[[noreturn]] void schema(std::string_view source, const std::string& msg) {
  throw Error(ErrorKind::SchemaError, fmt::format("{}: {}", source, msg));
}

const ordered_json& field(const ordered_json& doc, const char* key, std::string_view source) {
  const auto it = doc.find(key);
  if (it == doc.end()) schema(source, fmt::format("missing field \"{}\"", key));
  return *it;
}

void check_version(const ordered_json& doc, std::string_view source) {
  const ordered_json& v = field(doc, "format_version", source);
  if (!v.is_string()) schema(source, "\"format_version\" must be a string");
  const std::string s = v.get<std::string>();
  if (s != "1" && s.rfind("1.", 0) != 0) {
    schema(source, fmt::format("unsupported format_version \"{}\"", s));
  }
}

int read_n(const ordered_json& doc, std::string_view source) {
  const ordered_json& v = field(doc, "n", source);
  if (!v.is_number_integer() || v.get<long long>() < 2 || v.get<long long>() > 64) {
    schema(source, "\"n\" must be an integer in [2, 64]");
  }
  return v.get<int>();
}

RealTable read_table(const ordered_json& doc, const char* key, int n, std::string_view source) {
  const ordered_json& rows = field(doc, key, source);
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
    schema(source, fmt::format("\"{}\" must be an array of {} rows", key, n));
  }
  RealTable t(n, n);
  for (int i = 0; i < n; ++i) {
    const ordered_json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      schema(source, fmt::format("\"{}\" row {} must have {} entries", key, i, n));
    }
    for (int j = 0; j < n; ++j) {
      const ordered_json& x = row[static_cast<std::size_t>(j)];
      if (!x.is_number()) schema(source, fmt::format("\"{}\"[{}][{}] is not a number", key, i, j));
      t(i, j) = x.get<double>();
    }
  }
  return t;
}

std::string render_table(const RealTable& t) {
  std::string out = "[\n";
  for (int i = 0; i < t.rows(); ++i) {
    out += "    [";
    for (int j = 0; j < t.cols(); ++j) {
      if (j) out += ", ";
      out += format_double(t(i, j));
    }
    out += i + 1 < t.rows() ? "],\n" : "]\n";
  }
  return out + "  ]";
}

std::string indent_json(const ordered_json& j) {
  std::string s = j.dump(2);
  std::string out;
  for (char c : s) {
    out += c;
    if (c == '\n') out += "  ";
  }
  return out;
}

}  // namespace

ChannelFile parse_channel_file(std::string_view text, std::string_view source) {
  const ordered_json doc = parse_json(text, source);
  if (!doc.is_object()) schema(source, "document must be an object");
  check_version(doc, source);
  ChannelFile f;
  f.format_version = doc["format_version"].get<std::string>();
  const int n = read_n(doc, source);
  const ordered_json& form = field(doc, "form", source);
  if (!form.is_string()) schema(source, "\"form\" must be a string");
  const auto parsed = form_from_string(form.get<std::string>());
  if (!parsed) {
    schema(source, fmt::format("unknown form \"{}\" (expected kf, ev, lf or ev-gen)",
                               form.get<std::string>()));
  }
  f.form = *parsed;
  f.coefficients = read_table(doc, "coefficients", n, source);
  if (const auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) schema(source, "\"metadata\" must be an object");
    f.metadata = *it;
  }
  return f;
}

Loaded to_object(ChannelFile file) {
  const RealTable& c = file.coefficients;
  std::vector<std::string> warnings;
  auto make = [&]() -> AnyObject {
    switch (file.form) {
      case Form::kf: {
        KrausChannel ch(c);
        const auto neg = ch.negative_entries();
        if (!neg.empty()) {
          const IndexPair at = neg.front();
          throw EntryError(ErrorKind::InvariantError, at,
                           fmt::format("kf coefficient p_({},{}) = {} is negative", at.row,
                                       at.col, c(at.row, at.col)));
        }
        return ch;
      }
      case Form::ev:
        return EigenChannel(c);
      case Form::lf: {
        LindbladGenerator g(c);
        if (g.discarded_gamma00()) {
          warnings.push_back(fmt::format("gamma_00 = {} has no effect and was set to 0",
                                         *g.discarded_gamma00()));
        }
        return g;
      }
      case Form::ev_gen: {
        EigenGenerator g(c);
        if (g.discarded_eta00()) {
          warnings.push_back(
              fmt::format("eta_00 = {} set to 0 (trace preservation)", *g.discarded_eta00()));
        }
        return g;
      }
    }
    throw Error(ErrorKind::SchemaError, "unknown form");
  };
  AnyObject obj = make();
  return Loaded{std::move(file), std::move(obj), std::move(warnings)};
}

Loaded load_text(std::string_view text, std::string_view source) {
  return to_object(parse_channel_file(text, source));
}

Loaded load(const std::filesystem::path& path) {
  const std::string p = path.string();
  return load_text(read_text(path), p);
}

std::string render(const ChannelFile& file) {
  std::string out = "{\n";
  out += fmt::format("  \"format_version\": {},\n", ordered_json(file.format_version).dump());
  out += fmt::format("  \"n\": {},\n", file.n());
  out += fmt::format("  \"form\": \"{}\",\n", to_string(file.form));
  out += "  \"coefficients\": " + render_table(file.coefficients);
  if (!file.metadata.empty()) out += ",\n  \"metadata\": " + indent_json(file.metadata);
  return out + "\n}\n";
}

ChannelFile to_file(const AnyObject& obj, ordered_json metadata) {
  ChannelFile f;
  f.metadata = std::move(metadata);
  std::visit(
      [&f](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, KrausChannel>) {
          f.form = Form::kf;
          f.coefficients = o.coefficients();
        } else if constexpr (std::is_same_v<T, EigenChannel>) {
          f.form = Form::ev;
          f.coefficients = o.eigenvalues();
        } else if constexpr (std::is_same_v<T, LindbladGenerator>) {
          f.form = Form::lf;
          f.coefficients = o.rates();
        } else {
          f.form = Form::ev_gen;
          f.coefficients = o.eigenvalues();
        }
      },
      obj);
  return f;
}

void save(const std::filesystem::path& path, const ChannelFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, fmt::format("{}: cannot write file", path.string()));
  out << render(file);
}

namespace {

std::vector<double> parse_numbers(std::string_view list, char sep, std::string_view spec) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t end = std::min(list.find(sep, pos), list.size());
    const std::string item(list.substr(pos, end - pos));
    char* stop = nullptr;
    const double v = std::strtod(item.c_str(), &stop);
    if (item.empty() || stop != item.c_str() + item.size() || !std::isfinite(v)) {
      throw Error(ErrorKind::ParseError,
                  fmt::format("profile \"{}\": bad number \"{}\"", spec, item));
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace

RateProfile parse_profile(std::string_view spec) {
  if (spec == "constant") return RateProfile::constant(1.0);
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, fmt::format("unknown profile \"{}\"", spec));
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (kind == "const") {
    const auto v = parse_numbers(args, ',', spec);
    if (v.size() == 1) return RateProfile::constant(v[0]);
  } else if (kind == "exp") {
    const auto v = parse_numbers(args, ',', spec);
    if (v.size() == 1) return RateProfile::exponential(1.0, v[0]);
    if (v.size() == 2) return RateProfile::exponential(v[0], v[1]);
  } else if (kind == "poly") {
    return RateProfile::polynomial(parse_numbers(args, ',', spec));
  } else if (kind == "table") {
    std::vector<double> t, y;
    std::size_t pos = 0;
    while (pos <= args.size()) {
      const std::size_t end = std::min(args.find(',', pos), args.size());
      const auto pair = parse_numbers(args.substr(pos, end - pos), ':', spec);
      if (pair.size() != 2) break;
      t.push_back(pair[0]);
      y.push_back(pair[1]);
      pos = end + 1;
    }
    if (pos > args.size() && t.size() >= 2) {
      try {
        return RateProfile::tabulated(std::move(t), std::move(y));
      } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, fmt::format("profile \"{}\": {}", spec, e.what()));
      }
    }
  }
  throw Error(ErrorKind::ParseError, fmt::format("malformed profile \"{}\"", spec));
}

DensityMatrix parse_state(std::string_view text, std::string_view source) {
  const ordered_json doc = parse_json(text, source);
  if (!doc.is_object()) schema(source, "document must be an object");
  check_version(doc, source);
  const int n = read_n(doc, source);
  const RealTable re = read_table(doc, "rho_real", n, source);
  const RealTable im =
      doc.contains("rho_imag") ? read_table(doc, "rho_imag", n, source) : RealTable::Zero(n, n);
  MatrixC rho(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rho(i, j) = Complex(re(i, j), im(i, j));
  return DensityMatrix(std::move(rho));
}

DensityMatrix load_state(const std::filesystem::path& path) {
  const std::string p = path.string();
  return parse_state(read_text(path), p);
}

std::string render_state(const DensityMatrix& rho) {
  const MatrixC& m = rho.matrix();
  std::string out = "{\n";
  out += fmt::format("  \"format_version\": \"{}\",\n", kFormatVersion);
  out += fmt::format("  \"n\": {},\n", rho.dim());
  out += "  \"rho_real\": " + render_table(m.real()) + ",\n";
  out += "  \"rho_imag\": " + render_table(m.imag()) + "\n}\n";
  return out;
}

}  // namespace gmc
