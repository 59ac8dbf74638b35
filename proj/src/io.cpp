#include "segdepth/io.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace segdepth {

namespace jsonio {

json parse_object(const std::string& text, ErrCode code) {
  json v = json::parse(text, nullptr, false);
  if (v.is_discarded()) throw GeomError(code, "malformed JSON");
  if (!v.is_object()) throw GeomError(code, "expected a JSON object");
  return v;
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw GeomError(ErrCode::bad_input, std::string("missing field: ") + key);
  return *it;
}

json int_to_json(const Int& v) {
  if (fits_int64(v)) return json(to_int64(v));
  return json(v.get_str());
}

Int int_from_json(const json& v) {
  if (v.is_number_unsigned())
    return Int(static_cast<unsigned long>(v.get<std::uint64_t>()));
  if (v.is_number_integer())
    return Int(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return int_from_string(v.get<std::string>());
  throw GeomError(ErrCode::bad_input, "integer field is neither number nor string");
}

json rat_to_json(const Rat& v) {
  return json::array({int_to_json(v.get_num()), int_to_json(v.get_den())});
}

Rat rat_from_json(const json& v) {
  if (!v.is_array() || v.size() != 2)
    throw GeomError(ErrCode::bad_input, "rational must be a [numerator, denominator] pair");
  return make_rat(int_from_json(v[0]), int_from_json(v[1]));
}

json genspec_to_json(const GenSpec& spec) {
  return json{{"kind", gen_kind_name(spec.kind)},
              {"count", spec.count},
              {"seed", spec.seed},
              {"grid", spec.grid},
              {"perturb_den", spec.perturb_den}};
}

GenSpec genspec_from_json(const json& v) {
  if (!v.is_object()) throw GeomError(ErrCode::bad_input, "generator spec must be an object");
  GenSpec spec;
  spec.kind = gen_kind_from_name(field(v, "kind").get<std::string>());
  spec.count = field(v, "count").get<int>();
  spec.seed = field(v, "seed").get<std::uint64_t>();
  spec.grid = field(v, "grid").get<std::int64_t>();
  spec.perturb_den = field(v, "perturb_den").get<std::int64_t>();
  return spec;
}

json entry_to_json(const BoundEntry& e) {
  return json{{"label", e.label},
              {"j", e.j},
              {"observed", e.observed},
              {"bound", e.bound},
              {"relation", relation_name(e.relation)},
              {"conjecture", e.conjecture},
              {"status", check_status_name(e.status)}};
}

namespace {

Relation relation_from_name(const std::string& s) {
  if (s == "le") return Relation::le;
  if (s == "eq") return Relation::eq;
  if (s == "ge") return Relation::ge;
  throw GeomError(ErrCode::bad_input, "unknown relation: " + s);
}

CheckStatus status_from_name(const std::string& s) {
  if (s == "equal") return CheckStatus::equal;
  if (s == "below") return CheckStatus::below;
  if (s == "VIOLATION") return CheckStatus::violation;
  throw GeomError(ErrCode::bad_input, "unknown check status: " + s);
}

}  // namespace

BoundEntry entry_from_json(const json& v) {
  if (!v.is_object()) throw GeomError(ErrCode::bad_input, "report entry must be an object");
  BoundEntry e;
  e.label = field(v, "label").get<std::string>();
  e.j = field(v, "j").get<int>();
  e.observed = field(v, "observed").get<std::int64_t>();
  e.bound = field(v, "bound").get<std::int64_t>();
  e.relation = relation_from_name(field(v, "relation").get<std::string>());
  e.conjecture = field(v, "conjecture").get<bool>();
  e.status = status_from_name(field(v, "status").get<std::string>());
  return e;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace jsonio

using jsonio::json;

std::string set_hash(const PointSet& set) {
  std::string text = std::to_string(set.dimension()) + ";" +
                     std::to_string(set.size()) + ";";
  for (int i = 0; i < set.size(); ++i) {
    for (int a = 0; a < set.dimension(); ++a) {
      text += rat_to_string(set.coord(i, a));
      text += ',';
    }
    text += ';';
  }
  return jsonio::hex64(jsonio::fnv1a64(text));
}

std::string point_set_to_json(const PointSet& set,
                              const std::optional<GenSpec>& provenance) {
  json doc;
  doc["schema"] = "segdepth/point-set";
  doc["schema_version"] = kSchemaVersion;
  doc["dimension"] = set.dimension();
  doc["n"] = set.size();
  doc["hash"] = set_hash(set);
  json rows = json::array();
  for (int i = 0; i < set.size(); ++i) {
    json row = json::array();
    for (int a = 0; a < set.dimension(); ++a)
      row.push_back(jsonio::rat_to_json(set.coord(i, a)));
    rows.push_back(std::move(row));
  }
  doc["points"] = std::move(rows);
  if (provenance) doc["generator"] = jsonio::genspec_to_json(*provenance);
  return doc.dump(2) + "\n";
}

LoadedSet point_set_from_json(const std::string& text) {
  json doc = jsonio::parse_object(text, ErrCode::bad_input);
  if (jsonio::field(doc, "schema").get<std::string>() != "segdepth/point-set")
    throw GeomError(ErrCode::bad_input, "not a point-set document");
  int version = jsonio::field(doc, "schema_version").get<int>();
  if (version < 1 || version > kSchemaVersion)
    throw GeomError(ErrCode::bad_input,
                    "unsupported schema version " + std::to_string(version));
  int dim = jsonio::field(doc, "dimension").get<int>();
  int n = jsonio::field(doc, "n").get<int>();
  const json& rows = jsonio::field(doc, "points");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw GeomError(ErrCode::bad_input, "points array does not match n");
  std::vector<Rat> coords;
  coords.reserve(static_cast<std::size_t>(dim) * n);
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw GeomError(ErrCode::bad_input, "point row does not match dimension");
    for (const json& c : row) coords.push_back(jsonio::rat_from_json(c));
  }
  LoadedSet loaded{PointSet::from_coords(dim, std::move(coords)), {}};
  if (auto it = doc.find("hash"); it != doc.end()) {
    if (it->get<std::string>() != set_hash(loaded.set))
      throw GeomError(ErrCode::bad_input, "coordinate hash mismatch");
  }
  if (auto it = doc.find("generator"); it != doc.end())
    loaded.provenance = jsonio::genspec_from_json(*it);
  return loaded;
}

void write_point_set(const std::string& path, const PointSet& set,
                     const std::optional<GenSpec>& provenance) {
  write_text_file(path, point_set_to_json(set, provenance));
}

LoadedSet read_point_set(const std::string& path) {
  try {
    return point_set_from_json(read_text_file(path));
  } catch (const GeomError& e) {
    if (e.code() != ErrCode::bad_input) throw;
    // re-raise with the file named, without stacking prefixes
    std::string msg = e.what();
    const std::string prefix = std::string(err_code_name(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    if (msg.find(path) == std::string::npos) msg = path + ": " + msg;
    throw GeomError(e.code(), msg, e.witness());
  }
}

std::string report_to_json(const BoundReport& report) {
  json doc;
  doc["schema"] = "segdepth/report";
  doc["schema_version"] = kSchemaVersion;
  doc["subject"] = report.subject;
  doc["n"] = report.n;
  doc["set_hash"] = report.set_hash;
  doc["theorem_violation"] = report.any_theorem_violation();
  doc["conjecture_violation"] = report.any_conjecture_violation();
  json entries = json::array();
  for (const BoundEntry& e : report.entries)
    entries.push_back(jsonio::entry_to_json(e));
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string depth_records_csv(const AllDepths& depths) {
  std::string out = "p,q,depth,witness\n";
  for (const DepthRecord& r : depths.records) {
    out += std::to_string(r.p) + "," + std::to_string(r.q) + "," +
           std::to_string(r.depth) + "," + std::to_string(r.witness) + "\n";
  }
  return out;
}

std::string depth_histogram_csv(const DepthHistogram& hist) {
  std::string out = "j,s_j,S_j\n";
  for (std::size_t j = 0; j < hist.s.size(); ++j) {
    out += std::to_string(j) + "," + std::to_string(hist.s[j]) + "," +
           std::to_string(hist.S[j]) + "\n";
  }
  return out;
}

std::string facet_histogram_csv(const FacetHistogram& hist) {
  std::string out = "j,e_j,E_j\n";
  for (std::size_t j = 0; j < hist.e.size(); ++j) {
    out += std::to_string(j) + "," + std::to_string(hist.e[j]) + "," +
           std::to_string(hist.E[j]) + "\n";
  }
  return out;
}

std::string seal_journal_line(const std::string& object_text) {
  json obj = jsonio::parse_object(object_text, ErrCode::bad_input);
  obj.erase("crc");
  std::string canonical = obj.dump();
  obj["crc"] = jsonio::hex64(jsonio::fnv1a64(canonical));
  return obj.dump();
}

std::string open_journal_line(const std::string& line) {
  json obj;
  try {
    obj = jsonio::parse_object(line, ErrCode::journal_corrupt);
  } catch (const GeomError&) {
    throw GeomError(ErrCode::journal_corrupt, "unreadable journal line");
  }
  auto it = obj.find("crc");
  if (it == obj.end() || !it->is_string())
    throw GeomError(ErrCode::journal_corrupt, "journal line carries no checksum");
  std::string stored = it->get<std::string>();
  obj.erase("crc");
  std::string canonical = obj.dump();
  if (jsonio::hex64(jsonio::fnv1a64(canonical)) != stored)
    throw GeomError(ErrCode::journal_corrupt, "journal line checksum mismatch");
  return canonical;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GeomError(ErrCode::bad_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw GeomError(ErrCode::bad_input, "read failed on " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GeomError(ErrCode::bad_input, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw GeomError(ErrCode::bad_input, "write failed on " + path);
}

}  // namespace segdepth
