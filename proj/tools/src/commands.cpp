#include "sheafres_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sheafres_cli/documents.hpp"

namespace sheafres::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string field;
  std::string output;
};

// --field, then the document's field, then SHEAFRES_FIELD, then rational.
AnyField choose_field(const Common& common, const Json& doc) {
  if (!common.field.empty()) {
    try {
      return parse_field(common.field);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--field: ") + e.what());
    }
  }
  if (auto declared = declared_field(doc)) return *declared;
  if (const char* env = std::getenv("SHEAFRES_FIELD"); env != nullptr && *env != '\0') return parse_field(env);
  return RationalField{};
}

class Output {
 public:
  Output(const Common& common, std::ostream& fallback) : stream_(&fallback) {
    if (!common.output.empty()) {
      file_.open(common.output, std::ios::binary);
      if (!file_) throw ValidationError("cannot write '" + common.output + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit(const Common& common, std::ostream& out, const Json& doc) {
  Output o(common, out);
  *o << dump(doc) << '\n';
}

std::vector<std::string> split_names(const std::vector<std::string>& items) {
  std::vector<std::string> names;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) names.push_back(name);
    }
  }
  return names;
}

// ---- validate ----

int cmd_validate(const std::string& path, const Common& common, std::ostream& out, std::ostream& err) {
  ValidationDoc report;
  try {
    const Json doc = load_document(path);
    const fs::path base = fs::path(path).parent_path();
    report.input = doc.is_object() && doc.contains("kind") && doc.at("kind").is_string() ? doc.at("kind").get<std::string>()
                                                                                         : "unknown";
    if (report.input == "poset" || report.input == "simplicial_complex") {
      poset_from_json(doc, base);
    } else if (report.input == "poset_map") {
      map_from_json(doc, base);
    } else if (report.input == "sheaf") {
      std::visit(
          [&](const auto& field) {
            auto sheaf_doc = sheaf_from_json(doc, base, field);
            auto result = validate(sheaf_doc.sheaf);
            if (!result.valid) {
              report.valid = false;
              report.messages.push_back(result.message);
              const Poset& p = sheaf_doc.sheaf.poset();
              for (ElementId e : *result.triple) report.triple.push_back(p.name(e));
            }
          },
          choose_field(common, doc));
    } else {
      throw ValidationError("cannot validate documents of kind '" + report.input + "'");
    }
  } catch (const InternalError&) {
    throw;
  } catch (const Error& e) {
    report.valid = false;
    report.messages.emplace_back(e.what());
  }
  emit(common, out, to_json(report));
  if (!report.valid) {
    err << "invalid: " << report.messages.front() << '\n';
    return kFailure;
  }
  return kSuccess;
}

// ---- resolve ----

template <Field K>
void truncate(Resolution<K>& r, std::size_t max_degree) {
  if (r.terms.size() <= max_degree + 1) return;
  r.terms.erase(r.terms.begin() + static_cast<std::ptrdiff_t>(max_degree + 1), r.terms.end());
  r.differentials.erase(r.differentials.begin() + static_cast<std::ptrdiff_t>(max_degree), r.differentials.end());
  r.complete = false;
}

template <Field K>
int resolve_with(const SheafDoc<K>& input, const std::string& method, std::optional<std::size_t> max_degree,
                 const Common& common, std::ostream& out, std::ostream& err) {
  Resolution<K> r = [&] {
    if (method == "minimal") {
      auto full = minimal_resolution(input.sheaf);
      if (max_degree) truncate(full, *max_degree);
      return full;
    }
    return order_complex_resolution(input.sheaf, max_degree);
  }();
  ResolutionMeta meta;
  meta.method = method;
  auto exact = verify_exactness(r);
  meta.exact = exact.ok;
  bool ok = exact.ok;
  if (method == "minimal") {
    auto minimal = verify_minimality(r);
    meta.minimal_certificate = minimal.ok;
    ok = ok && minimal.ok;
    if (!minimal.ok) err << "minimality certificate failed: " << minimal.message << '\n';
  }
  if (!exact.ok) err << "exactness certificate failed: " << exact.message << '\n';
  Output o(common, out);
  write_resolution(*o, r, meta);
  return ok ? kSuccess : kInternal;
}

int cmd_resolve(const std::string& path, const std::string& method, std::optional<std::size_t> max_degree,
                const Common& common, std::ostream& out, std::ostream& err) {
  const Json doc = load_document(path);
  const fs::path base = fs::path(path).parent_path();
  return std::visit(
      [&](const auto& field) {
        auto input = sheaf_from_json(doc, base, field);
        return resolve_with(input, method, max_degree, common, out, err);
      },
      choose_field(common, doc));
}

// ---- multiplicities ----

template <Field K>
int multiplicities_with(const SheafDoc<K>& input, bool verify, const Common& common, std::ostream& out,
                        std::ostream& err) {
  MultiplicitiesDoc doc;
  doc.field = input.sheaf.field().name();
  const Poset& p = input.sheaf.poset();
  if (!verify) {
    auto m = multiplicities(minimal_resolution(input.sheaf));
    for (std::size_t j = 0; j < m.degrees(); ++j) {
      for (ElementId e = 0; e < p.size(); ++e) {
        if (m.at(j, e) > 0) doc.rows.push_back({p.name(e), j, m.at(j, e), std::nullopt});
      }
    }
    emit(common, out, to_json(doc));
    return kSuccess;
  }
  const bool simplicial = input.ambient.complex && !input.ambient.include_empty && !input.open_set &&
                          is_constant(input.sheaf);
  if (!simplicial) {
    throw UsageError("--verify needs a simplicial complex (or its constant sheaf) without the empty simplex");
  }
  auto check = verify_multiplicity_theorem(*input.ambient.complex, input.sheaf.field());
  std::stable_sort(check.rows.begin(), check.rows.end(),
                   [](const MultiplicityRow& a, const MultiplicityRow& b) { return a.degree < b.degree; });
  for (const auto& row : check.rows) {
    doc.rows.push_back({p.name(input.ambient.face(row.simplex)), row.degree, row.computed, row.oracle});
  }
  doc.verified = check.ok;
  emit(common, out, to_json(doc));
  if (!check.ok) {
    err << "multiplicities disagree with the compactly supported star cohomology\n";
    return kInternal;
  }
  return kSuccess;
}

int cmd_multiplicities(const std::string& path, bool verify, const Common& common, std::ostream& out,
                       std::ostream& err) {
  const Json doc = load_document(path);
  const fs::path base = fs::path(path).parent_path();
  return std::visit(
      [&](const auto& field) { return multiplicities_with(sheaf_from_json(doc, base, field), verify, common, out, err); },
      choose_field(common, doc));
}

// ---- pushforward ----

template <Field K>
int pushforward_with(const SheafDoc<K>& input, const MapDoc& map, bool compact, std::optional<std::size_t> degree,
                     const Common& common, std::ostream& out) {
  if (!(*input.ambient.poset == map.map->source())) {
    throw DomainError("the map's source is not the poset the sheaf lives on");
  }
  PushforwardDoc<K> doc;
  doc.compact = compact;
  Resolution<K> r = [&] {
    if (!compact) {
      if (input.open_set) throw UsageError("a sheaf on an open subset needs --compact");
      return minimal_resolution(input.sheaf);
    }
    if (!map.simplicial) throw DomainError("--compact needs a map induced by a simplicial map");
    std::vector<ElementId> embedding;
    if (input.open_set) {
      embedding = *input.open_set;
    } else {
      for (ElementId e = 0; e < input.ambient.poset->size(); ++e) embedding.push_back(e);
    }
    return minimal_resolution(extend_by_zero(input.sheaf, input.ambient.poset, embedding));
  }();
  if (degree) {
    doc.degrees.emplace_back(*degree, pushforward(r, *map.map, *degree));
  } else {
    const std::size_t count = std::max<std::size_t>(r.length(), 1);
    for (std::size_t j = 0; j < count; ++j) doc.degrees.emplace_back(j, pushforward(r, *map.map, j));
  }
  emit(common, out, pushforward_to_json(doc));
  return kSuccess;
}

int cmd_pushforward(const std::string& sheaf_path, const std::string& map_path, bool compact,
                    std::optional<long long> degree, const Common& common, std::ostream& out) {
  if (degree && *degree < 0) throw DomainError("--degree must be non-negative");
  const Json doc = load_document(sheaf_path);
  const Json map_json = load_document(map_path);
  auto map = map_from_json(map_json, fs::path(map_path).parent_path());
  std::optional<std::size_t> j;
  if (degree) j = static_cast<std::size_t>(*degree);
  return std::visit(
      [&](const auto& field) {
        return pushforward_with(sheaf_from_json(doc, fs::path(sheaf_path).parent_path(), field), map, compact, j,
                                common, out);
      },
      choose_field(common, doc));
}

// ---- cohomology ----

int cmd_cohomology(const std::string& path, const std::string& star, const std::vector<std::string>& open_items,
                   const Common& common, std::ostream& out) {
  const Json doc = load_document(path);
  auto input = poset_from_json(doc, fs::path(path).parent_path());
  const Poset& p = *input.poset;
  const auto open_names = split_names(open_items);
  if (!star.empty() && !open_names.empty()) throw UsageError("--star and --open are exclusive");

  auto simplex_of = [&](const std::string& name) {
    ElementId e = p.id(name);
    if (input.include_empty && e == 0) throw LookupError("the empty simplex has no open star");
    return static_cast<std::size_t>(e - (input.include_empty ? 1 : 0));
  };

  CohomologyDoc result;
  AnyField any = choose_field(common, doc);
  result.field = field_name(any);
  std::visit(
      [&](const auto& field) {
        if (!star.empty()) {
          if (!input.complex) throw UsageError("--star needs a simplicial complex");
          result.oracle = "star_c";
          result.subset = {star};
          result.dims = oracle_star_cohomology_c(*input.complex, simplex_of(star), field);
          return;
        }
        if (input.complex) {
          std::vector<std::size_t> open;
          if (open_names.empty()) {
            for (std::size_t s = 0; s < input.complex->size(); ++s) open.push_back(s);
          } else {
            for (const auto& n : open_names) open.push_back(simplex_of(n));
          }
          std::sort(open.begin(), open.end());
          for (std::size_t s : open) result.subset.push_back(p.name(input.face(s)));
          result.oracle = "open_c";
          result.dims = oracle_open_cohomology_c(*input.complex, open, field);
          return;
        }
        std::vector<ElementId> open;
        if (open_names.empty()) {
          for (ElementId e = 0; e < p.size(); ++e) open.push_back(e);
        } else {
          for (const auto& n : open_names) open.push_back(p.id(n));
        }
        std::sort(open.begin(), open.end());
        for (ElementId e : open) result.subset.push_back(p.name(e));
        result.oracle = "order_complex";
        result.dims = oracle_order_complex_cohomology(p, open, field);
      },
      any);
  emit(common, out, to_json(result));
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Injective resolutions and derived pushforwards of sheaves on finite posets", "sheafres"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sheafres 0.1.0");

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", common.field, "Coefficient field: rational or 'mod p' (default from the document)");
    sub->add_option("-o,--output", common.output, "Write the output document to this file");
  };

  std::string input;
  auto* validate_cmd = app.add_subcommand("validate", "Check a poset, complex, sheaf or poset_map document");
  validate_cmd->add_option("input", input, "Input document")->required();
  add_common(validate_cmd);

  std::string method = "minimal";
  std::optional<std::size_t> max_degree;
  auto* resolve_cmd = app.add_subcommand("resolve", "Compute an injective resolution");
  resolve_cmd->add_option("input", input, "Sheaf, poset or simplicial_complex document")->required();
  resolve_cmd->add_option("--method", method, "minimal or order-complex")
      ->check(CLI::IsMember({"minimal", "order-complex"}));
  resolve_cmd->add_option("--max-degree", max_degree, "Drop terms above this degree");
  add_common(resolve_cmd);

  bool verify = false;
  auto* mult_cmd = app.add_subcommand("multiplicities", "Multiplicities of the minimal resolution");
  mult_cmd->add_option("input", input, "Sheaf, poset or simplicial_complex document")->required();
  mult_cmd->add_flag("--verify", verify, "Compare with compactly supported star cohomology (simplicial input)");
  add_common(mult_cmd);

  std::string map_path;
  bool compact = false;
  std::optional<long long> degree;
  auto* push_cmd = app.add_subcommand("pushforward", "Derived pushforward along a poset map");
  push_cmd->add_option("sheaf", input, "Sheaf document on the map's source")->required();
  push_cmd->add_option("map", map_path, "poset_map document")->required();
  push_cmd->add_flag("--compact", compact, "Compactly supported pushforward (simplicial map, open domain)");
  push_cmd->add_option("--degree", degree, "Only this degree");
  add_common(push_cmd);

  std::string star;
  std::vector<std::string> open_items;
  auto* coh_cmd = app.add_subcommand("cohomology", "Reference cochain-complex cohomology");
  coh_cmd->add_option("input", input, "Poset or simplicial_complex document")->required();
  coh_cmd->add_option("--star", star, "Compactly supported cohomology of the open star of this simplex");
  coh_cmd->add_option("--open", open_items, "Open set (comma-separated names)");
  add_common(coh_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(input, common, out, err);
    if (*resolve_cmd) return cmd_resolve(input, method, max_degree, common, out, err);
    if (*mult_cmd) return cmd_multiplicities(input, verify, common, out, err);
    if (*push_cmd) return cmd_pushforward(input, map_path, compact, degree, common, out);
    if (*coh_cmd) return cmd_cohomology(input, star, open_items, common, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace sheafres::cli
