#include "banded/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace banded {

using nlohmann::json;

FormatError::FormatError(const std::string& what, std::size_t line_, std::size_t column_)
    : std::runtime_error(line_ == 0 ? what : what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
      line(line_),
      column(column_) {}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    // Drop the library's own prefix, keep its description.
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw FormatError("malformed JSON: " + msg, line, col);
  }
}

Rational coordinate(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.dump());
  if (v.is_number()) throw FormatError(where + ": write non-integer coordinates as decimal strings, got " + v.dump());
  throw FormatError(where + ": expected a coordinate string, got " + v.dump());
}

std::vector<Point2> point_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw FormatError(std::string("field \"") + key + "\" must be a list of points");
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& p = arr[i];
    std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2) throw FormatError(where + ": expected [x, y]");
    pts.push_back({coordinate(p[0], where + ".x"), coordinate(p[1], where + ".y")});
  }
  return pts;
}

json point_json(const Point2& p) { return json::array({format_rational(p.x), format_rational(p.y)}); }

std::string number_text(const Rational& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(v));
  return buf;
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("instance file must hold a JSON object");
  auto p = point_list(doc, "P");
  auto q = point_list(doc, "Pprime");
  if (doc.contains("n")) {
    const json& n = doc.at("n");
    if (!n.is_number_unsigned() || n.get<std::size_t>() != p.size() || n.get<std::size_t>() != q.size()) {
      throw FormatError("field \"n\" = " + n.dump() + " does not match P (" + std::to_string(p.size()) + ") and Pprime (" +
                        std::to_string(q.size()) + ")");
    }
  }
  InstanceDocument out{[&] {
                         try {
                           return SliceInstance::make(std::move(p), std::move(q));
                         } catch (const InvalidInstance& e) {
                           throw FormatError(std::string("invalid instance: ") + e.what());
                         }
                       }(),
                       "", ""};
  if (doc.contains("name") && doc["name"].is_string()) out.name = doc["name"].get<std::string>();
  if (doc.contains("source") && doc["source"].is_string()) out.source = doc["source"].get<std::string>();
  return out;
}

InstanceDocument load_instance_document(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

SliceInstance load_instance(const std::filesystem::path& path) { return load_instance_document(path).instance; }

std::string format_instance(const InstanceDocument& doc) {
  json out = json::object();
  if (!doc.name.empty()) out["name"] = doc.name;
  if (!doc.source.empty()) out["source"] = doc.source;
  out["n"] = doc.instance.n();
  json p = json::array(), q = json::array();
  for (const auto& v : doc.instance.source.vertices) p.push_back(point_json(v));
  for (const auto& v : doc.instance.target.vertices) q.push_back(point_json(v));
  out["P"] = p;
  out["Pprime"] = q;
  return out.dump(2) + "\n";
}

void save_instance(const std::filesystem::path& path, const InstanceDocument& doc) { write_text_file(path, format_instance(doc)); }

void save_instance(const std::filesystem::path& path, const SliceInstance& inst) { save_instance(path, InstanceDocument{inst, "", ""}); }

std::string format_mesh(const BandedSurface& s, MeshFormat format) {
  std::ostringstream out;
  if (format == MeshFormat::Off) {
    out << "OFF\n" << s.vertices.size() << ' ' << s.faces.size() << " 0\n";
    for (const auto& v : s.vertices) {
      out << number_text(v.position.x) << ' ' << number_text(v.position.y) << ' ' << number_text(v.position.z) << '\n';
    }
    for (const auto& f : s.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  } else {
    out << "# " << s.vertices.size() << " vertices, " << s.faces.size() << " faces\n";
    for (const auto& v : s.vertices) {
      out << "v " << number_text(v.position.x) << ' ' << number_text(v.position.y) << ' ' << number_text(v.position.z) << '\n';
    }
    for (const auto& f : s.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    const auto& p = s.vertices[i].position;
    out << "# exact " << i << ' ' << format_rational(p.x) << ' ' << format_rational(p.y) << ' ' << format_rational(p.z) << '\n';
  }
  return out.str();
}

void export_mesh(const BandedSurface& s, MeshFormat format, const std::filesystem::path& path) {
  write_text_file(path, format_mesh(s, format));
}

BandedSurface parse_off(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::vector<std::size_t> token_line;
  std::map<std::size_t, Point3> exact;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      std::istringstream c(line.substr(hash + 1));
      std::string tag, x, y, z;
      std::size_t idx = 0;
      if (c >> tag && tag == "exact") {
        if (!(c >> idx >> x >> y >> z)) throw FormatError("malformed exact comment", line_no, hash + 1);
        try {
          exact[idx] = {parse_rational(x), parse_rational(y), parse_rational(z)};
        } catch (const std::invalid_argument& e) {
          throw FormatError(std::string("exact comment: ") + e.what(), line_no, hash + 1);
        }
      }
      line = line.substr(0, hash);
    }
    std::istringstream words(line);
    std::string w;
    while (words >> w) {
      tokens.push_back(w);
      token_line.push_back(line_no);
    }
  }
  std::size_t pos = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (pos >= tokens.size()) throw FormatError(std::string("unexpected end of OFF data, expected ") + what, line_no, 1);
    return tokens[pos++];
  };
  auto as_count = [&](const std::string& t) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size() || v < 0) throw std::invalid_argument(t);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw FormatError("expected a non-negative integer, got '" + t + "'", token_line[pos - 1], 1);
    }
  };
  if (next("header") != "OFF") throw FormatError("missing OFF header", token_line.empty() ? 1 : token_line[0], 1);
  std::size_t nv = as_count(next("vertex count"));
  std::size_t nf = as_count(next("face count"));
  as_count(next("edge count"));

  BandedSurface s;
  for (std::size_t i = 0; i < nv; ++i) {
    Point3 p;
    for (Rational* c : {&p.x, &p.y, &p.z}) {
      const std::string& t = next("vertex coordinate");
      try {
        *c = parse_rational(t);
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("vertex coordinate: ") + e.what(), token_line[pos - 1], 1);
      }
    }
    s.vertices.push_back({p, {VertexLabel::Kind::Steiner, 0, i}});
  }
  for (std::size_t f = 0; f < nf; ++f) {
    if (as_count(next("face size")) != 3) throw FormatError("only triangle faces are supported", token_line[pos - 1], 1);
    Face face;
    for (auto& v : face) {
      v = as_count(next("face index"));
      if (v >= nv) throw FormatError("face index " + std::to_string(v) + " out of range", token_line[pos - 1], 1);
    }
    s.faces.push_back(face);
  }
  if (exact.size() == nv && (nv == 0 || exact.rbegin()->first == nv - 1)) {
    for (auto& [i, p] : exact) s.vertices[i].position = p;
  }
  return s;
}

BandedSurface import_off(const std::filesystem::path& path) { return parse_off(read_text_file(path)); }

std::string format_bands(const BandedSurface& s) {
  json out = json::object();
  out["n"] = s.n();
  out["bands"] = s.bands;
  out["paths"] = s.paths;
  return out.dump() + "\n";
}

void save_bands(const std::filesystem::path& path, const BandedSurface& s) { write_text_file(path, format_bands(s)); }

void attach_bands(BandedSurface& s, const std::string& band_text) {
  json doc = parse_json(band_text);
  if (!doc.is_object() || !doc.contains("bands") || !doc.contains("paths")) {
    throw FormatError("band file needs \"bands\" and \"paths\" lists");
  }
  std::vector<std::vector<std::size_t>> bands, paths;
  try {
    bands = doc.at("bands").get<std::vector<std::vector<std::size_t>>>();
    paths = doc.at("paths").get<std::vector<std::vector<std::size_t>>>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("band file: ") + e.what());
  }
  if (bands.size() != paths.size()) throw FormatError("band file: bands and paths differ in length");
  if (doc.contains("n") && !(doc["n"].is_number_unsigned() && doc["n"].get<std::size_t>() == bands.size())) {
    throw FormatError("band file: n does not match the number of bands");
  }
  for (const auto& b : bands) {
    for (std::size_t f : b) {
      if (f >= s.faces.size()) throw FormatError("band file: face " + std::to_string(f) + " out of range");
    }
  }
  for (const auto& p : paths) {
    for (std::size_t v : p) {
      if (v >= s.vertices.size()) throw FormatError("band file: path vertex " + std::to_string(v) + " out of range");
    }
  }
  s.bands = std::move(bands);
  s.paths = std::move(paths);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) s.vertices[i].label = {VertexLabel::Kind::Steiner, 0, i};
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const auto& p = s.paths[i];
    if (p.empty()) continue;
    s.vertices[p.front()].label = {VertexLabel::Kind::Original, 0, i};
    s.vertices[p.back()].label = {VertexLabel::Kind::Original, 1, i};
  }
  std::size_t steiner = 0;
  for (auto& v : s.vertices) {
    if (v.label.kind == VertexLabel::Kind::Steiner) v.label.index = steiner++;
  }
}

void load_bands(const std::filesystem::path& path, BandedSurface& s) { attach_bands(s, read_text_file(path)); }

std::string format_section(const CrossSection& section) {
  std::ostringstream out;
  const auto& poly = section.polygon;
  out << "# cross-section at z = " << format_rational(section.t) << ", " << poly.size() << " vertices\n";
  for (const auto& p : poly.vertices) {
    out << "v " << number_text(p.x) << ' ' << number_text(p.y) << ' ' << number_text(section.t) << '\n';
  }
  out << 'l';
  for (std::size_t i = 0; i < poly.size(); ++i) out << ' ' << i + 1;
  out << " 1\n";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out << "# exact " << i << ' ' << format_rational(poly[i].x) << ' ' << format_rational(poly[i].y) << ' '
        << format_rational(section.t) << '\n';
  }
  return out.str();
}

void export_section(const CrossSection& section, const std::filesystem::path& path) {
  write_text_file(path, format_section(section));
}

}  // namespace banded
