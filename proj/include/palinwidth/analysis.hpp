#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "genset.hpp"
#include "genset_file.hpp"
#include "group_table.hpp"
#include "palindromes.hpp"
#include "relations.hpp"

namespace palinwidth {

enum class GensetMode { kAsGiven, kInvolutionClass, kSigmaClass, kLemmaAugmented };
enum class OutputFormat { kJson, kCsv, kText };

inline std::string to_string(GensetMode m) {
  switch (m) {
    case GensetMode::kAsGiven: return "as-given";
    case GensetMode::kInvolutionClass: return "involution-class";
    case GensetMode::kSigmaClass: return "sigma-class";
    case GensetMode::kLemmaAugmented: return "lemma-augmented";
  }
  return "?";
}

inline GensetMode parse_genset_mode(std::string_view s) {
  for (auto m : {GensetMode::kAsGiven, GensetMode::kInvolutionClass, GensetMode::kSigmaClass,
                 GensetMode::kLemmaAugmented}) {
    if (s == to_string(m)) return m;
  }
  throw InvalidArgument("unknown genset mode '" + std::string(s) + "'");
}

struct RunConfig {
  std::string group;        // catalog name
  std::string genset_file;  // alternative to group
  GensetMode mode = GensetMode::kAsGiven;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_relation_len = kDefaultMaxRelationLen;
  OutputFormat format = OutputFormat::kJson;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  bool timings = false;

  void validate() const {
    if (group.empty() == genset_file.empty()) {
      throw InvalidArgument("exactly one of --group and --genset-file is required");
    }
    if (max_order == 0) throw InvalidArgument("--max-order must be positive");
    if (max_relation_len < 2) throw InvalidArgument("--max-relation-len must be at least 2");
  }
};

/// The group and generating set an analysis runs on, after applying the
/// generating-set mode.
struct ResolvedGroup {
  GroupInstance instance;
  GensetMode mode = GensetMode::kAsGiven;
  std::optional<std::size_t> alternating_degree;  // n for sigma-class rows
  std::optional<std::string> added_label;
  std::optional<std::string> witness_relation;
  bool lemma_applied = false;
};

inline ResolvedGroup resolve_group(const RunConfig& config) {
  config.validate();
  ResolvedGroup r;
  r.mode = config.mode;
  if (config.mode == GensetMode::kSigmaClass) {
    if (config.group.empty()) {
      throw InvalidArgument("sigma-class needs an alternating catalog group");
    }
    auto spec = parse_catalog_name(config.group);
    if (spec.family != CatalogSpec::Family::kAlternating) {
      throw InvalidArgument("sigma-class needs an alternating catalog group");
    }
    r.instance = sigma_class_genset(spec.param, config.max_order);
    r.instance.name = config.group;
    r.alternating_degree = spec.param;
    return r;
  }

  GroupInstance base = config.group.empty()
                           ? make_instance(config.genset_file,
                                           load_genset_file(config.genset_file), config.max_order)
                           : catalog_group(config.group, config.max_order);
  switch (config.mode) {
    case GensetMode::kAsGiven:
      r.instance = std::move(base);
      break;
    case GensetMode::kInvolutionClass: {
      GeneratingSet gens = involution_class_genset(base.table);
      r.instance = make_instance(base.name, std::move(gens), config.max_order);
      break;
    }
    case GensetMode::kLemmaAugmented: {
      AugmentationResult aug = lemma_augment(base.gens, base.table, config.max_relation_len);
      r.lemma_applied = true;
      r.added_label = aug.added;
      if (aug.witness_relation) {
        r.witness_relation = format_word(*aug.witness_relation, aug.gens_out);
      }
      GroupTable table = aug.rebuilt_table ? std::move(*aug.rebuilt_table) : std::move(base.table);
      r.instance = GroupInstance{base.name, std::move(aug.gens_out), std::move(table)};
      break;
    }
    case GensetMode::kSigmaClass:
      break;
  }
  return r;
}

struct Bounds {
  std::optional<std::uint32_t> involution;  // lower
  std::optional<std::uint32_t> coset;       // upper
  std::optional<std::uint32_t> covering2x;  // upper
};

struct AnalysisReport {
  std::string group;
  std::size_t order = 0;
  std::string genset;
  std::size_t generator_count = 0;
  std::size_t palindrome_count = 0;
  std::uint32_t width = 0;
  std::vector<std::size_t> layers;
  std::size_t n_subgroup_order = 0;
  bool n_subgroup_normal = false;
  std::string n_subgroup_status;
  std::optional<std::string> added_label;
  std::optional<std::string> witness_relation;
  bool lemma_applied = false;
  Bounds bounds;
  std::optional<std::uint32_t> n_quarter_bound;
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::pair<std::string, double>> timings_ms;
};

namespace detail {

class PhaseTimer {
 public:
  explicit PhaseTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}

  template <typename F>
  decltype(auto) run(const std::string& phase, F&& f) {
    auto start = std::chrono::steady_clock::now();
    struct Record {
      PhaseTimer& t;
      const std::string& phase;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
        t.sink_.emplace_back(phase, d.count());
      }
    } rec{*this, phase, start};
    return f();
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
};

inline std::string describe_n_status(const NSubgroup& n, const GroupTable& table,
                                     std::size_t cap) {
  if (n.exact || n.members.full()) return "exact";
  if (cap > 2 && n_subgroup_detailed(table, cap - 1).members == n.members) return "stable";
  return "lower-approximation";
}

// Smallest covering number over the classes of the generators that
// generate the group on their own.
inline std::optional<std::uint32_t> generator_class_covering(const GroupTable& table) {
  std::optional<std::uint32_t> best;
  ElementSet seen = table.empty_set();
  for (const auto& g : table.generators()) {
    ElementIndex idx = table.index_of(g);
    if (idx == GroupTable::kIdentity || seen.contains(idx)) continue;
    ElementSet cls = conjugacy_class(idx, table);
    seen |= cls;
    if (!subgroup_generated(cls, table).full()) continue;
    std::uint32_t m = covering_number(cls, table);
    if (!best || m < *best) best = m;
  }
  return best;
}

inline std::optional<std::uint32_t> max_involution_bound(const GroupTable& table) {
  std::optional<InvolutionBound> bound;
  try {
    bound.emplace(table);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  std::uint32_t best = 0;
  for (ElementIndex g = 0; g < table.order(); ++g) best = std::max(best, (*bound)(g));
  return best;
}

}  // namespace detail

/// Palindrome set, exact width, reverse-square subgroup and all applicable
/// bounds for one configured group. Throws InvariantViolation if the bounds
/// fail to bracket the computed width.
inline AnalysisReport analyze_width(const RunConfig& config) {
  AnalysisReport rep;
  detail::PhaseTimer timer(rep.timings_ms);
  ResolvedGroup rg = timer.run("group", [&] { return resolve_group(config); });
  const GroupTable& table = rg.instance.table;

  rep.group = rg.instance.name;
  rep.order = table.order();
  rep.genset = to_string(rg.mode);
  rep.generator_count = rg.instance.gens.size();
  rep.added_label = rg.added_label;
  rep.witness_relation = rg.witness_relation;
  rep.lemma_applied = rg.lemma_applied;

  PalindromeData pal = timer.run("palindromes", [&] { return palindrome_set(table); });
  WidthReport wr = timer.run("width", [&] { return palindromic_width(pal, table); });
  rep.palindrome_count = pal.size();
  rep.width = wr.width;
  rep.layers = wr.layer_sizes;

  NSubgroup n = timer.run("n_subgroup", [&] {
    return n_subgroup_detailed(table, config.max_relation_len);
  });
  rep.n_subgroup_order = n.members.count();
  rep.n_subgroup_normal = true;  // n_subgroup_detailed throws otherwise
  rep.n_subgroup_status = detail::describe_n_status(n, table, config.max_relation_len);

  timer.run("bounds", [&] {
    rep.bounds.involution = detail::max_involution_bound(table);
    rep.bounds.coset = width_upper_bound_via_subgroup(n.members, pal, table);
    if (auto m = detail::generator_class_covering(table)) rep.bounds.covering2x = 2 * *m;
  });
  if (rg.alternating_degree) {
    rep.n_quarter_bound = static_cast<std::uint32_t>((*rg.alternating_degree + 3) / 4);
  }

  bool bracket = true;
  for (auto lower : {rep.bounds.involution, rep.n_quarter_bound}) {
    if (lower && *lower > rep.width) bracket = false;
  }
  for (auto upper : {rep.bounds.coset, rep.bounds.covering2x}) {
    if (upper && *upper < rep.width) bracket = false;
  }
  if (!bracket) {
    throw InvariantViolation("bounds do not bracket the palindromic width of " + rep.group);
  }
  rep.verdicts.emplace_back("bounds_bracket_width", "pass");
  if (!config.timings) rep.timings_ms.clear();
  return rep;
}

struct VerifyReport {
  std::string group;
  std::string genset;
  std::size_t order = 0;
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool failed() const {
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const auto& v) { return v.second.starts_with("fail"); });
  }
  bool inconclusive() const {
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const auto& v) { return v.second == "inconclusive"; });
  }
};

namespace detail {

inline std::string verdict(bool ok, const std::string& detail = "") {
  if (ok) return "pass";
  return detail.empty() ? "fail" : "fail: " + detail;
}

inline bool palindrome_set_closed(const PalindromeData& pal, const GroupTable& table) {
  if (!pal.contains(GroupTable::kIdentity)) return false;
  for (std::uint32_t row = 0; row < table.letter_count(); ++row) {
    if (!pal.contains(table.letter_element(row))) return false;
  }
  for (ElementIndex m : pal.discovery) {
    if (!pal.contains(table.inverse(m))) return false;
    for (std::uint32_t row = 0; row < table.letter_count(); ++row) {
      ElementIndex l = table.letter_element(row);
      if (!pal.contains(table.multiply(table.multiply(l, m), l))) return false;
    }
  }
  return true;
}

// Facts forced by an alphabet of involutions: palindromes square to the
// identity, odd-order elements are not palindromes, and a single class of
// generators gives P = class u {e}.
inline std::string involution_alphabet_verdict(const PalindromeData& pal, const GroupTable& table) {
  for (const auto& g : table.generators()) {
    if (g.order() != 2) return "not applicable (generators not all involutions)";
  }
  for (ElementIndex p : pal.discovery) {
    if (table.multiply(p, p) != GroupTable::kIdentity) return "fail: palindrome of order > 2";
  }
  for (ElementIndex g = 1; g < table.order(); ++g) {
    if (table.element_order(g) % 2 == 1 && pal.contains(g)) {
      return "fail: odd-order palindrome";
    }
  }
  ElementSet cls = conjugacy_class(table.index_of(table.generators().front()), table);
  bool single_class = std::all_of(table.generators().begin(), table.generators().end(),
                                  [&](const auto& g) { return cls.contains(table.index_of(g)); });
  if (single_class) {
    cls.insert(GroupTable::kIdentity);
    if (!(cls == pal.members)) return "fail: palindromes differ from class plus identity";
  }
  return "pass";
}

}  // namespace detail

/// Runs every applicable verification suite on the configured group.
inline VerifyReport analyze_verify(const RunConfig& config) {
  VerifyReport rep;
  detail::PhaseTimer timer(rep.timings_ms);
  ResolvedGroup rg = timer.run("group", [&] { return resolve_group(config); });
  const GroupTable& table = rg.instance.table;
  const GeneratingSet& gens = rg.instance.gens;
  rep.group = rg.instance.name;
  rep.genset = to_string(rg.mode);
  rep.order = table.order();
  auto& v = rep.verdicts;

  PalindromeData pal = palindrome_set(table);
  WidthReport wr = palindromic_width(pal, table);
  const bool simple = is_simple(table);
  const bool abelian = is_abelian(table);

  timer.run("palindrome_set", [&] {
    v.emplace_back("palindrome_set_closure",
                   detail::verdict(detail::palindrome_set_closed(pal, table)));
  });

  std::optional<NSubgroup> n;
  timer.run("n_subgroup", [&] {
    try {
      n = n_subgroup_detailed(table, config.max_relation_len);
      v.emplace_back("n_subgroup_normal_palindromic",
                     detail::verdict(n->members.is_subset_of(pal.members), "not palindromic"));
    } catch (const InvariantViolation& e) {
      v.emplace_back("n_subgroup_normal_palindromic", std::string("fail: ") + e.what());
    }
  });

  timer.run("reverse_square_identities", [&] {
    PropNormalReport pr =
        verify_prop_normal(table, config.samples, config.seed, config.max_relation_len);
    if (pr.inconclusive) {
      v.emplace_back("reverse_square_identities", "inconclusive");
    } else {
      v.emplace_back("reverse_square_identities",
                     detail::verdict(pr.failures == 0, std::to_string(pr.failures) + " of " +
                                                           std::to_string(pr.checks) + " checks"));
    }
  });

  timer.run("conjugates_in_p2", [&] {
    v.emplace_back("conjugates_in_p2", detail::verdict(conjugates_in_p2(pal, table)));
  });

  timer.run("bounds", [&] {
    if (n) {
      std::uint32_t ub = width_upper_bound_via_subgroup(n->members, pal, table);
      v.emplace_back("coset_bound_dominates_width", detail::verdict(ub >= wr.width));
    }
    if (auto m = detail::generator_class_covering(table)) {
      v.emplace_back("covering_bound_dominates_width", detail::verdict(wr.width <= 2 * *m));
    } else {
      v.emplace_back("covering_bound_dominates_width",
                     "not applicable (no generator class generates)");
    }
    if (auto lb = detail::max_involution_bound(table)) {
      bool ok = true;
      InvolutionBound bound(table);
      for (ElementIndex g = 0; g < table.order(); ++g) ok = ok && bound(g) <= wr.layer[g];
      v.emplace_back("involution_bound_below_width", detail::verdict(ok));
    } else {
      v.emplace_back("involution_bound_below_width", "not applicable (not one involution class)");
    }
  });

  timer.run("augmentation", [&] {
    if (abelian) {
      v.emplace_back("augmentation_adds_at_most_one", "inapplicable (abelian)");
      v.emplace_back("augmented_width_one", "not applicable (abelian)");
      return;
    }
    AugmentationResult aug = lemma_augment(gens, table, config.max_relation_len);
    const GroupTable& at = aug.table_or(table);
    if (!aug.witness_relation) {
      v.emplace_back("augmentation_adds_at_most_one", "inconclusive");
    } else {
      const Word& q = *aug.witness_relation;
      bool ok = aug.gens_out.size() <= gens.size() + 1 &&
                evaluate(q, at) == GroupTable::kIdentity &&
                evaluate(reverse_word(q), at) != GroupTable::kIdentity;
      v.emplace_back("augmentation_adds_at_most_one", detail::verdict(ok));
    }
    if (!simple) {
      v.emplace_back("augmented_width_one", "not applicable (not simple)");
      return;
    }
    PalindromeData apal = palindrome_set(at);
    bool ok = apal.members.full() && palindromic_width(apal, at).width == 1;
    v.emplace_back("augmented_width_one", detail::verdict(ok));
  });

  timer.run("involution_alphabet", [&] {
    v.emplace_back("involution_alphabet", detail::involution_alphabet_verdict(pal, table));
    if (!simple || abelian) {
      v.emplace_back("involution_class_width_exceeds_one", "not applicable (not simple)");
      return;
    }
    GroupInstance ic = make_instance(rep.group, involution_class_genset(table), config.max_order);
    PalindromeData ipal = palindrome_set(ic.table);
    std::string verdict = detail::involution_alphabet_verdict(ipal, ic.table);
    if (verdict == "pass" && palindromic_width(ipal, ic.table).width <= 1) {
      verdict = "fail: width 1";
    }
    v.emplace_back("involution_class_width_exceeds_one", verdict);
  });

  if (!config.timings) rep.timings_ms.clear();
  return rep;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

template <typename T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline std::string opt_csv(const std::optional<std::uint32_t>& v) {
  return v ? std::to_string(*v) : "";
}

inline std::string join_layers(const std::vector<std::size_t>& layers, char sep) {
  std::string out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(layers[i]);
  }
  return out;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["genset"] = r.genset;
  j["generators"] = r.generator_count;
  j["palindrome_count"] = r.palindrome_count;
  j["width"] = r.width;
  j["layers"] = r.layers;
  j["n_subgroup_order"] = r.n_subgroup_order;
  j["n_subgroup_normal"] = r.n_subgroup_normal;
  j["n_subgroup_status"] = r.n_subgroup_status;
  if (r.lemma_applied) {
    j["augmentation"] = {{"added", detail::opt(r.added_label)},
                         {"witness_relation", detail::opt(r.witness_relation)}};
  }
  j["bounds"] = {{"involution", detail::opt(r.bounds.involution)},
                 {"coset", detail::opt(r.bounds.coset)},
                 {"covering2x", detail::opt(r.bounds.covering2x)}};
  if (r.n_quarter_bound) j["n_quarter_bound"] = *r.n_quarter_bound;
  j["verdicts"] = nlohmann::ordered_json::object();
  for (const auto& [k, val] : r.verdicts) j["verdicts"][k] = val;
  j["timings_ms"] = nlohmann::ordered_json::object();
  for (const auto& [k, val] : r.timings_ms) j["timings_ms"][k] = val;
  return j;
}

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["genset"] = r.genset;
  j["verdicts"] = nlohmann::ordered_json::object();
  for (const auto& [k, val] : r.verdicts) j["verdicts"][k] = val;
  j["timings_ms"] = nlohmann::ordered_json::object();
  for (const auto& [k, val] : r.timings_ms) j["timings_ms"][k] = val;
  return j;
}

inline const char* kCsvHeader =
    "group,genset,order,generators,palindrome_count,width,layers,n_subgroup_order,"
    "n_subgroup_status,bound_involution,bound_coset,bound_covering2x,n_quarter_bound,status";

inline std::string to_csv_row(const AnalysisReport& r) {
  std::ostringstream os;
  os << detail::csv_escape(r.group) << ',' << r.genset << ',' << r.order << ','
     << r.generator_count << ',' << r.palindrome_count << ',' << r.width << ','
     << detail::join_layers(r.layers, ';') << ',' << r.n_subgroup_order << ','
     << r.n_subgroup_status << ',' << detail::opt_csv(r.bounds.involution) << ','
     << detail::opt_csv(r.bounds.coset) << ',' << detail::opt_csv(r.bounds.covering2x) << ','
     << detail::opt_csv(r.n_quarter_bound) << ",ok";
  return os.str();
}

inline std::string to_text(const AnalysisReport& r) {
  auto show = [](const std::optional<std::uint32_t>& v) {
    return v ? std::to_string(*v) : std::string("n/a");
  };
  std::ostringstream os;
  os << "group             " << r.group << " (order " << r.order << ")\n"
     << "generating set    " << r.genset << ", " << r.generator_count << " generators\n";
  if (r.lemma_applied) {
    os << "augmentation      added " << r.added_label.value_or("nothing") << ", witness "
       << r.witness_relation.value_or("none found within cap") << "\n";
  }
  os << "palindromes       " << r.palindrome_count << "\n"
     << "width             " << r.width << "\n"
     << "layers            " << detail::join_layers(r.layers, ' ') << "\n"
     << "n-subgroup        order " << r.n_subgroup_order << " (" << r.n_subgroup_status
     << ", normal)\n"
     << "bounds            involution " << show(r.bounds.involution) << ", coset "
     << show(r.bounds.coset) << ", covering2x " << show(r.bounds.covering2x) << "\n";
  if (r.n_quarter_bound) os << "ceil(n/4)         " << *r.n_quarter_bound << "\n";
  for (const auto& [k, val] : r.timings_ms) os << "time " << k << " " << val << " ms\n";
  return os.str();
}

inline std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "group " << r.group << " (order " << r.order << "), genset " << r.genset << "\n";
  for (const auto& [k, val] : r.verdicts) os << "  " << k << ": " << val << "\n";
  for (const auto& [k, val] : r.timings_ms) os << "time " << k << " " << val << " ms\n";
  return os.str();
}

/// One row per (group, mode) in the given order; failures are isolated to
/// their row.
struct SurveyRow {
  std::string group;
  GensetMode mode;
  std::optional<AnalysisReport> report;
  std::string error;
};

inline std::vector<SurveyRow> run_survey(const RunConfig& base, const std::vector<std::string>& groups,
                                         const std::vector<GensetMode>& modes) {
  std::vector<SurveyRow> rows;
  for (const auto& g : groups) {
    for (GensetMode m : modes) {
      RunConfig c = base;
      c.group = g;
      c.genset_file.clear();
      c.mode = m;
      SurveyRow row{g, m, std::nullopt, ""};
      try {
        row.report = analyze_width(c);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : rows) {
    if (row.report) {
      out += to_csv_row(*row.report) + "\n";
    } else {
      out += detail::csv_escape(row.group) + "," + to_string(row.mode) +
             ",,,,,,,,,,,," + detail::csv_escape("error: " + row.error) + "\n";
    }
  }
  return out;
}

inline nlohmann::ordered_json survey_json(const std::vector<SurveyRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    if (row.report) {
      arr.push_back(to_json(*row.report));
    } else {
      arr.push_back({{"group", row.group}, {"genset", to_string(row.mode)}, {"error", row.error}});
    }
  }
  return arr;
}

inline std::string survey_text(const std::vector<SurveyRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    if (row.report) {
      out += row.group + " " + to_string(row.mode) + ": width " + std::to_string(row.report->width) +
             ", |P| " + std::to_string(row.report->palindrome_count) + ", order " +
             std::to_string(row.report->order) + "\n";
    } else {
      out += row.group + " " + to_string(row.mode) + ": error: " + row.error + "\n";
    }
  }
  return out;
}

}  // namespace palinwidth
