#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "sheafres/derived.hpp"
#include "sheafres/errors.hpp"

namespace sheafres::cli {

using Json = nlohmann::ordered_json;
using AnyField = std::variant<RationalField, PrimeField>;

/// "rational", "mod p" or "mod<p>". Throws DomainError otherwise.
AnyField parse_field(std::string_view text);
std::string field_name(const AnyField& field);

/// Reads and parses a JSON document; syntax errors carry line and column.
Json load_document(const std::filesystem::path& path);
/// Parses JSON text; `origin` names the source in diagnostics.
Json parse_document(const std::string& text, const std::string& origin);

/// The `field` entry of a document, if present.
std::optional<AnyField> declared_field(const Json& doc);

/// A poset, possibly the face poset of a simplicial complex.
struct PosetDoc {
  std::shared_ptr<const Poset> poset;
  std::shared_ptr<const SimplicialComplex> complex;  // null for a plain poset
  bool include_empty = false;

  /// Element id of simplex i of the complex.
  ElementId face(std::size_t simplex) const { return static_cast<ElementId>(simplex + (include_empty ? 1 : 0)); }
};

/// A `poset` or `simplicial_complex` document, or a path to one relative to
/// `base`.
PosetDoc poset_from_json(const Json& ref, const std::filesystem::path& base);

template <Field K>
struct SheafDoc {
  Sheaf<K> sheaf;
  /// The poset the document names; the sheaf lives on `open_set` inside it
  /// when that is given.
  PosetDoc ambient;
  std::optional<std::vector<ElementId>> open_set;
};

/// A `sheaf` document, or a `poset` / `simplicial_complex` document read as
/// its constant sheaf.
template <Field K>
SheafDoc<K> sheaf_from_json(const Json& doc, const std::filesystem::path& base, const K& field);

struct MapDoc {
  PosetDoc source;
  PosetDoc target;
  std::shared_ptr<const PosetMap> map;
  std::optional<SimplicialMap> simplicial;
};

MapDoc map_from_json(const Json& doc, const std::filesystem::path& base);

Json poset_to_json(const Poset& poset);
template <Field K>
Json scalar_to_json(const typename K::Scalar& value);
template <Field K>
Json sheaf_to_json(const Sheaf<K>& sheaf);

struct ResolutionMeta {
  std::string method;  // "minimal" or "order-complex"
  bool exact = false;
  std::optional<bool> minimal_certificate;
};

/// Writes a resolution document, one term per line.
template <Field K>
void write_resolution(std::ostream& out, const Resolution<K>& resolution, const ResolutionMeta& meta);

template <Field K>
struct ResolutionDoc {
  Resolution<K> resolution;
  ResolutionMeta meta;
};

template <Field K>
ResolutionDoc<K> resolution_from_json(const Json& doc, const K& field);

struct MultiplicitiesDoc {
  std::string field;
  struct Row {
    std::string element;
    std::size_t degree = 0;
    std::size_t multiplicity = 0;
    std::optional<std::size_t> oracle;

    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<Row> rows;
  std::optional<bool> verified;

  friend bool operator==(const MultiplicitiesDoc&, const MultiplicitiesDoc&) = default;
};

Json to_json(const MultiplicitiesDoc& doc);
MultiplicitiesDoc multiplicities_from_json(const Json& doc);

struct CohomologyDoc {
  std::string field;
  std::string oracle;  // "star_c", "open_c", "order_complex"
  std::vector<std::string> subset;
  std::vector<std::size_t> dims;

  friend bool operator==(const CohomologyDoc&, const CohomologyDoc&) = default;
};

Json to_json(const CohomologyDoc& doc);
CohomologyDoc cohomology_from_json(const Json& doc);

struct ValidationDoc {
  std::string input;  // kind of the validated document
  bool valid = true;
  std::vector<std::string> messages;
  std::vector<std::string> triple;

  friend bool operator==(const ValidationDoc&, const ValidationDoc&) = default;
};

Json to_json(const ValidationDoc& doc);
ValidationDoc validation_from_json(const Json& doc);

template <Field K>
struct PushforwardDoc {
  bool compact = false;
  std::vector<std::pair<std::size_t, Sheaf<K>>> degrees;
};

template <Field K>
Json pushforward_to_json(const PushforwardDoc<K>& doc);
template <Field K>
PushforwardDoc<K> pushforward_from_json(const Json& doc, const K& field);

/// Compact single-line rendering used for every output document.
std::string dump(const Json& doc);

}  // namespace sheafres::cli
