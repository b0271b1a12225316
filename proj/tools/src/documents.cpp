#include "sheafres_cli/documents.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sheafres::cli {

namespace fs = std::filesystem;

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ValidationError(std::string("document is missing '") + key + "'");
  return doc.at(key);
}

std::string kind_of(const Json& doc) {
  const Json& kind = require(doc, "kind");
  if (!kind.is_string()) throw ValidationError("'kind' must be a string");
  return kind.get<std::string>();
}

// Names may be written as strings or integers.
std::string name_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ValidationError("expected a name, got " + j.dump());
}

std::size_t count_of(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ValidationError(std::string("'") + what + "' must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

template <Field K>
typename K::Scalar scalar_of(const Json& j, const K& field) {
  try {
    if (j.is_string()) return field.parse(j.get<std::string>());
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  } catch (const DomainError& e) {
    throw ValidationError("bad scalar " + j.dump() + ": " + e.what());
  }
  throw ValidationError("scalars must be integer or fraction strings, got " + j.dump());
}

ElementId element_of(const Poset& poset, const Json& j) {
  auto name = name_of(j);
  auto id = poset.find(name);
  if (!id) throw ValidationError("unknown element '" + name + "'");
  return *id;
}

// Vertex labels sorted numerically when they are all integers.
std::vector<std::string> sorted_labels(std::vector<std::string> labels) {
  auto numeric = [](const std::string& s) {
    return !s.empty() && s.size() < 18 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (std::all_of(labels.begin(), labels.end(), numeric)) {
    std::sort(labels.begin(), labels.end(),
              [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });
  }
  return labels;
}

template <Field K>
SparseMatrix<K> dense_matrix_of(const Json& j, std::size_t rows, std::size_t cols, const K& field,
                                const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw ValidationError(where + ": expected " + std::to_string(rows) + " rows");
  }
  SparseMatrix<K> m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ValidationError(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_of(j[r][c], field));
  }
  return m;
}

template <Field K>
Json triplets_to_json(const SparseMatrix<K>& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) entries.push_back(Json::array({r, c, v.str()}));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

template <Field K>
SparseMatrix<K> triplets_of(const Json& j, const K& field) {
  const std::size_t rows = count_of(require(j, "rows"), "rows");
  const std::size_t cols = count_of(require(j, "cols"), "cols");
  std::vector<std::vector<typename SparseVector<K>::Entry>> entries(rows);
  for (const auto& e : require(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw ValidationError("matrix entries must be [row, col, value]");
    const std::size_t r = count_of(e[0], "row");
    const std::size_t c = count_of(e[1], "col");
    if (r >= rows || c >= cols) throw ValidationError("matrix entry outside the declared shape");
    entries[r].emplace_back(c, scalar_of(e[2], field));
  }
  std::vector<SparseVector<K>> vectors;
  vectors.reserve(rows);
  for (auto& row : entries) vectors.emplace_back(std::move(row));
  return SparseMatrix<K>::from_rows(field, cols, std::move(vectors));
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json load_ref(const Json& ref, const fs::path& base, fs::path& new_base) {
  if (ref.is_string()) {
    fs::path path = base / ref.get<std::string>();
    new_base = path.parent_path();
    return load_document(path);
  }
  new_base = base;
  return ref;
}

}  // namespace

AnyField parse_field(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (t == "rational" || t == "q") return RationalField{};
  if (t.rfind("mod", 0) == 0 && t.size() > 3 &&
      std::all_of(t.begin() + 3, t.end(), [](unsigned char c) { return std::isdigit(c); }) && t.size() < 14) {
    const auto p = std::stoull(t.substr(3));
    if (p < (1ull << 31) && is_prime(static_cast<std::uint32_t>(p))) return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw DomainError("unknown field '" + std::string(text) + "' (expected 'rational' or 'mod p' with p prime)");
}

std::string field_name(const AnyField& field) {
  return std::visit([](const auto& k) { return k.name(); }, field);
}

Json parse_document(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    auto pos = what.find("]: ");
    if (pos != std::string::npos) what = what.substr(pos + 3);
    throw ValidationError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

Json load_document(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), path.string());
}

std::optional<AnyField> declared_field(const Json& doc) {
  if (!doc.is_object() || !doc.contains("field")) return std::nullopt;
  const Json& f = doc.at("field");
  if (!f.is_string()) throw ValidationError("'field' must be a string such as \"rational\" or \"mod 3\"");
  return parse_field(f.get<std::string>());
}

PosetDoc poset_from_json(const Json& ref, const fs::path& base) {
  fs::path here;
  const Json doc = load_ref(ref, base, here);
  const std::string kind = kind_of(doc);
  PosetDoc out;
  if (kind == "poset") {
    std::vector<std::string> names;
    for (const auto& e : require(doc, "elements")) names.push_back(name_of(e));
    auto resolve = [&](const Json& pairs) {
      std::vector<Cover> out_pairs;
      for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2) throw ValidationError("poset relations must be [lower, upper] pairs");
        auto find = [&](const Json& n) {
          auto name = name_of(n);
          auto it = std::find(names.begin(), names.end(), name);
          if (it == names.end()) throw ValidationError("relation refers to unknown element '" + name + "'");
          return static_cast<ElementId>(it - names.begin());
        };
        out_pairs.emplace_back(find(pair[0]), find(pair[1]));
      }
      return out_pairs;
    };
    if (doc.contains("relations")) {
      out.poset = std::make_shared<const Poset>(Poset::from_relations(names, resolve(doc.at("relations"))));
    } else {
      out.poset = std::make_shared<const Poset>(Poset::from_covers(names, resolve(require(doc, "covers"))));
    }
    return out;
  }
  if (kind == "simplicial_complex") {
    std::vector<std::vector<std::string>> facet_names;
    std::vector<std::string> labels;
    for (const auto& f : require(doc, "facets")) {
      if (!f.is_array()) throw ValidationError("each facet must be a list of vertices");
      facet_names.emplace_back();
      for (const auto& v : f) facet_names.back().push_back(name_of(v));
      labels.insert(labels.end(), facet_names.back().begin(), facet_names.back().end());
    }
    if (doc.contains("vertices")) {
      labels.clear();
      for (const auto& v : doc.at("vertices")) labels.push_back(name_of(v));
    } else {
      labels = sorted_labels(std::move(labels));
    }
    std::vector<Simplex> facets;
    for (const auto& names : facet_names) {
      Simplex s;
      for (const auto& n : names) {
        auto it = std::find(labels.begin(), labels.end(), n);
        if (it == labels.end()) throw ValidationError("facet uses undeclared vertex '" + n + "'");
        s.push_back(static_cast<VertexId>(it - labels.begin()));
      }
      facets.push_back(std::move(s));
    }
    out.include_empty = doc.value("include_empty", false);
    out.complex = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(labels, facets));
    out.poset = std::make_shared<const Poset>(out.complex->face_poset(out.include_empty));
    return out;
  }
  throw ValidationError("expected a poset or simplicial_complex document, got kind '" + kind + "'");
}

template <Field K>
SheafDoc<K> sheaf_from_json(const Json& doc, const fs::path& base, const K& field) {
  const std::string kind = kind_of(doc);
  if (kind == "poset" || kind == "simplicial_complex") {
    auto ambient = poset_from_json(doc, base);
    return {constant_sheaf(ambient.poset, field), ambient, std::nullopt};
  }
  if (kind != "sheaf") throw ValidationError("expected a sheaf document, got kind '" + kind + "'");
  auto ambient = poset_from_json(require(doc, "poset"), base);
  std::shared_ptr<const Poset> poset = ambient.poset;
  std::optional<std::vector<ElementId>> open_set;
  if (doc.contains("open_set")) {
    std::vector<ElementId> members;
    for (const auto& n : doc.at("open_set")) members.push_back(element_of(*ambient.poset, n));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!ambient.poset->is_up_closed(members)) throw DomainError("'open_set' is not up-closed (open)");
    poset = std::make_shared<const Poset>(ambient.poset->induced(members));
    open_set = std::move(members);
  }
  if (doc.value("constant", false)) return {constant_sheaf(poset, field), ambient, open_set};

  std::vector<std::size_t> dims(poset->size(), 0);
  if (doc.contains("dims")) {
    const Json& d = doc.at("dims");
    if (!d.is_object()) throw ValidationError("'dims' must map element names to dimensions");
    for (const auto& [name, value] : d.items()) dims[element_of(*poset, Json(name))] = count_of(value, "dims");
  }
  std::map<Cover, SparseMatrix<K>> maps;
  if (doc.contains("maps")) {
    for (const auto& m : doc.at("maps")) {
      const ElementId a = element_of(*poset, require(m, "from"));
      const ElementId b = element_of(*poset, require(m, "to"));
      const std::string where = "map '" + poset->name(a) + "' -> '" + poset->name(b) + "'";
      if (!poset->is_cover(a, b)) throw ValidationError(where + " is not on a cover relation");
      if (maps.count({a, b})) throw ValidationError(where + " is given twice");
      maps.emplace(Cover{a, b}, dense_matrix_of(require(m, "matrix"), dims[b], dims[a], field, where));
    }
  }
  return {Sheaf<K>(poset, field, std::move(dims), std::move(maps)), ambient, open_set};
}

MapDoc map_from_json(const Json& doc, const fs::path& base) {
  const std::string kind = kind_of(doc);
  if (kind != "poset_map") throw ValidationError("expected a poset_map document, got kind '" + kind + "'");
  MapDoc out{poset_from_json(require(doc, "source"), base), poset_from_json(require(doc, "target"), base), nullptr,
             std::nullopt};
  const Poset& src = *out.source.poset;
  const Poset& tgt = *out.target.poset;
  const bool simplicial_faces = out.source.complex && out.target.complex && !out.source.include_empty &&
                                !out.target.include_empty;
  if (doc.contains("vertex_map")) {
    if (!simplicial_faces) {
      throw ValidationError("'vertex_map' needs simplicial complexes whose face posets omit the empty simplex");
    }
    const auto& labels = out.source.complex->vertex_labels();
    const auto& target_labels = out.target.complex->vertex_labels();
    std::vector<VertexId> images(labels.size(), static_cast<VertexId>(-1));
    for (const auto& [name, value] : doc.at("vertex_map").items()) {
      auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end()) throw ValidationError("vertex_map: unknown source vertex '" + name + "'");
      auto image = name_of(value);
      auto jt = std::find(target_labels.begin(), target_labels.end(), image);
      if (jt == target_labels.end()) throw ValidationError("vertex_map: unknown target vertex '" + image + "'");
      images[static_cast<std::size_t>(it - labels.begin())] = static_cast<VertexId>(jt - target_labels.begin());
    }
    for (std::size_t v = 0; v < images.size(); ++v) {
      if (images[v] == static_cast<VertexId>(-1)) throw ValidationError("vertex_map: vertex '" + labels[v] + "' has no image");
    }
    out.simplicial.emplace(out.source.complex, out.target.complex, std::move(images));
    out.map = std::make_shared<const PosetMap>(out.simplicial->poset_map(out.source.poset, out.target.poset));
    return out;
  }
  std::vector<ElementId> images(src.size(), static_cast<ElementId>(-1));
  const Json& table = require(doc, "images");
  if (!table.is_object()) throw ValidationError("'images' must map source element names to target element names");
  for (const auto& [name, value] : table.items()) images[element_of(src, Json(name))] = element_of(tgt, value);
  for (ElementId e = 0; e < images.size(); ++e) {
    if (images[e] == static_cast<ElementId>(-1)) throw ValidationError("images: element '" + src.name(e) + "' has no image");
  }
  out.map = std::make_shared<const PosetMap>(out.source.poset, out.target.poset, std::move(images));
  if (simplicial_faces) out.simplicial = SimplicialMap::from_poset_map(out.source.complex, out.target.complex, *out.map);
  return out;
}

Json poset_to_json(const Poset& poset) {
  Json out;
  out["kind"] = "poset";
  out["elements"] = poset.names();
  Json covers = Json::array();
  for (auto [a, b] : poset.covers()) covers.push_back(Json::array({poset.name(a), poset.name(b)}));
  out["covers"] = std::move(covers);
  return out;
}

template <Field K>
Json scalar_to_json(const typename K::Scalar& value) {
  return value.str();
}

template <Field K>
Json sheaf_to_json(const Sheaf<K>& sheaf) {
  const Poset& p = sheaf.poset();
  Json out;
  out["kind"] = "sheaf";
  out["field"] = sheaf.field().name();
  out["poset"] = poset_to_json(p);
  Json dims = Json::object();
  for (ElementId e = 0; e < p.size(); ++e) dims[p.name(e)] = sheaf.dim(e);
  out["dims"] = std::move(dims);
  Json maps = Json::array();
  for (const auto& [cover, m] : sheaf.cover_maps()) {
    if (m.rows() == 0 || m.cols() == 0) continue;
    Json rows = Json::array();
    for (const auto& row : m.to_dense()) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.str());
      rows.push_back(std::move(r));
    }
    Json entry;
    entry["from"] = p.name(cover.first);
    entry["to"] = p.name(cover.second);
    entry["matrix"] = std::move(rows);
    maps.push_back(std::move(entry));
  }
  out["maps"] = std::move(maps);
  return out;
}

template <Field K>
void write_resolution(std::ostream& out, const Resolution<K>& r, const ResolutionMeta& meta) {
  const Poset& p = r.sheaf.poset();
  auto field = [&](const char* key, const Json& value, const char* sep = ",\n") {
    out << Json(key).dump() << ':' << value.dump() << sep;
  };
  out << "{";
  field("kind", "resolution", ",");
  field("method", meta.method, ",");
  field("field", r.sheaf.field().name(), ",");
  field("complete", r.complete, ",");
  field("minimal", r.minimal);
  field("sheaf", sheaf_to_json(r.sheaf));
  Json augmentation = Json::array();
  for (ElementId e = 0; e < p.size(); ++e) {
    Json entry;
    entry["element"] = p.name(e);
    entry["map"] = triplets_to_json(r.augmentation.components[e]);
    augmentation.push_back(std::move(entry));
  }
  field("augmentation", augmentation);
  out << "\"terms\":[";
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    Json term;
    term["degree"] = k;
    Json labels = Json::array();
    for (ElementId g : r.terms[k].generators()) labels.push_back(p.name(g));
    term["generators"] = std::move(labels);
    if (k < r.differentials.size()) term["differential"] = triplets_to_json(r.differentials[k].matrix());
    out << (k == 0 ? "\n" : ",\n") << term.dump();
  }
  out << "],\n";
  Json summary;
  Json counts = Json::array();
  std::string table;
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    counts.push_back(r.terms[k].size());
    table += (k == 0 ? "" : " / ") + std::to_string(r.terms[k].size());
  }
  summary["generator_counts"] = std::move(counts);
  summary["table"] = table;
  summary["exact"] = meta.exact;
  if (meta.minimal_certificate) summary["minimal"] = *meta.minimal_certificate;
  field("summary", summary, "}\n");
  out.flush();
}

template <Field K>
ResolutionDoc<K> resolution_from_json(const Json& doc, const K& field) {
  if (kind_of(doc) != "resolution") throw ValidationError("expected a resolution document");
  auto sheaf_doc = sheaf_from_json(require(doc, "sheaf"), fs::path(), field);
  const Sheaf<K>& sheaf = sheaf_doc.sheaf;
  const Poset& p = sheaf.poset();
  ResolutionMeta meta;
  meta.method = require(doc, "method").get<std::string>();
  const Json& summary = require(doc, "summary");
  meta.exact = require(summary, "exact").get<bool>();
  if (summary.contains("minimal")) meta.minimal_certificate = summary.at("minimal").get<bool>();

  Augmentation<K> augmentation;
  const Json& aug = require(doc, "augmentation");
  if (aug.size() != p.size()) throw ValidationError("augmentation must list every element");
  for (ElementId e = 0; e < p.size(); ++e) {
    if (element_of(p, require(aug[e], "element")) != e) throw ValidationError("augmentation elements out of order");
    augmentation.components.push_back(triplets_of(require(aug[e], "map"), field));
  }
  std::vector<InjectiveSheaf> terms;
  for (const auto& t : require(doc, "terms")) {
    std::vector<ElementId> labels;
    for (const auto& g : require(t, "generators")) labels.push_back(element_of(p, g));
    terms.emplace_back(sheaf.poset_ptr(), std::move(labels));
  }
  std::vector<LabeledMatrix<K>> differentials;
  const Json& term_docs = doc.at("terms");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (!term_docs[k].contains("differential")) break;
    InjectiveSheaf codomain = k + 1 < terms.size() ? terms[k + 1] : InjectiveSheaf(sheaf.poset_ptr(), {});
    differentials.emplace_back(terms[k], std::move(codomain), triplets_of(term_docs[k].at("differential"), field));
  }
  Resolution<K> r{sheaf, std::move(augmentation), std::move(terms), std::move(differentials),
                  require(doc, "minimal").get<bool>(), require(doc, "complete").get<bool>()};
  return {std::move(r), std::move(meta)};
}

Json to_json(const MultiplicitiesDoc& doc) {
  Json out;
  out["kind"] = "multiplicities";
  out["field"] = doc.field;
  Json rows = Json::array();
  for (const auto& row : doc.rows) {
    Json r;
    r["element"] = row.element;
    r["degree"] = row.degree;
    r["multiplicity"] = row.multiplicity;
    if (row.oracle) {
      r["oracle"] = *row.oracle;
      r["pass"] = *row.oracle == row.multiplicity;
    }
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  if (doc.verified) out["verified"] = *doc.verified;
  return out;
}

MultiplicitiesDoc multiplicities_from_json(const Json& doc) {
  if (kind_of(doc) != "multiplicities") throw ValidationError("expected a multiplicities document");
  MultiplicitiesDoc out;
  out.field = require(doc, "field").get<std::string>();
  for (const auto& r : require(doc, "rows")) {
    MultiplicitiesDoc::Row row;
    row.element = name_of(require(r, "element"));
    row.degree = count_of(require(r, "degree"), "degree");
    row.multiplicity = count_of(require(r, "multiplicity"), "multiplicity");
    if (r.contains("oracle")) row.oracle = count_of(r.at("oracle"), "oracle");
    out.rows.push_back(std::move(row));
  }
  if (doc.contains("verified")) out.verified = doc.at("verified").get<bool>();
  return out;
}

Json to_json(const CohomologyDoc& doc) {
  Json out;
  out["kind"] = "cohomology";
  out["field"] = doc.field;
  out["oracle"] = doc.oracle;
  out["subset"] = doc.subset;
  out["dims"] = doc.dims;
  return out;
}

CohomologyDoc cohomology_from_json(const Json& doc) {
  if (kind_of(doc) != "cohomology") throw ValidationError("expected a cohomology document");
  CohomologyDoc out;
  out.field = require(doc, "field").get<std::string>();
  out.oracle = require(doc, "oracle").get<std::string>();
  for (const auto& s : require(doc, "subset")) out.subset.push_back(name_of(s));
  for (const auto& d : require(doc, "dims")) out.dims.push_back(count_of(d, "dims"));
  return out;
}

Json to_json(const ValidationDoc& doc) {
  Json out;
  out["kind"] = "validation";
  out["input"] = doc.input;
  out["valid"] = doc.valid;
  out["messages"] = doc.messages;
  if (!doc.triple.empty()) out["triple"] = doc.triple;
  return out;
}

ValidationDoc validation_from_json(const Json& doc) {
  if (kind_of(doc) != "validation") throw ValidationError("expected a validation document");
  ValidationDoc out;
  out.input = require(doc, "input").get<std::string>();
  out.valid = require(doc, "valid").get<bool>();
  for (const auto& m : require(doc, "messages")) out.messages.push_back(m.get<std::string>());
  if (doc.contains("triple")) {
    for (const auto& t : doc.at("triple")) out.triple.push_back(name_of(t));
  }
  return out;
}

template <Field K>
Json pushforward_to_json(const PushforwardDoc<K>& doc) {
  Json out;
  out["kind"] = "pushforward";
  out["compact"] = doc.compact;
  Json degrees = Json::array();
  for (const auto& [j, sheaf] : doc.degrees) {
    Json d;
    d["degree"] = j;
    Json dims = Json::array();
    for (auto v : sheaf.dims()) dims.push_back(v);
    d["dims"] = std::move(dims);
    d["sheaf"] = sheaf_to_json(sheaf);
    degrees.push_back(std::move(d));
  }
  out["degrees"] = std::move(degrees);
  return out;
}

template <Field K>
PushforwardDoc<K> pushforward_from_json(const Json& doc, const K& field) {
  if (kind_of(doc) != "pushforward") throw ValidationError("expected a pushforward document");
  PushforwardDoc<K> out;
  out.compact = require(doc, "compact").get<bool>();
  for (const auto& d : require(doc, "degrees")) {
    out.degrees.emplace_back(count_of(require(d, "degree"), "degree"),
                             sheaf_from_json(require(d, "sheaf"), fs::path(), field).sheaf);
  }
  return out;
}

std::string dump(const Json& doc) { return doc.dump(); }

#define SHEAFRES_CLI_INSTANTIATE(K)                                                             \
  template SheafDoc<K> sheaf_from_json(const Json&, const fs::path&, const K&);                 \
  template Json scalar_to_json<K>(const typename K::Scalar&);                                   \
  template Json sheaf_to_json(const Sheaf<K>&);                                                 \
  template void write_resolution(std::ostream&, const Resolution<K>&, const ResolutionMeta&);   \
  template ResolutionDoc<K> resolution_from_json(const Json&, const K&);                        \
  template Json pushforward_to_json(const PushforwardDoc<K>&);                                  \
  template PushforwardDoc<K> pushforward_from_json(const Json&, const K&);

SHEAFRES_CLI_INSTANTIATE(RationalField)
SHEAFRES_CLI_INSTANTIATE(PrimeField)

}  // namespace sheafres::cli
