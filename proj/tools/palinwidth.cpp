// palinwidth: palindromic width of finite permutation groups.
//
//   palinwidth width  --group A5 --genset sigma-class
//   palinwidth verify --group PSL(2,7) --seed 7
//   palinwidth survey --group A5 --group A6 --genset sigma-class --format csv

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <palinwidth/analysis.hpp>

namespace {

enum ExitCode { kOk = 0, kInvalidInput = 2, kCapacity = 3, kVerificationFailed = 4 };

std::size_t default_max_order() {
  if (const char* env = std::getenv("PALINWIDTH_MAX_ORDER")) {
    try {
      std::size_t v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid PALINWIDTH_MAX_ORDER='" << env << "'\n";
  }
  return palinwidth::kDefaultMaxOrder;
}

int fail(const char* kind, const std::string& message, int code) {
  nlohmann::ordered_json err{{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << err.dump() << "\n";
  return code;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw palinwidth::InvalidArgument("cannot write '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace palinwidth;

  CLI::App app{"Palindromic width of finite permutation groups"};
  app.require_subcommand(1);

  RunConfig config;
  config.max_order = default_max_order();
  std::vector<std::string> groups;
  std::vector<std::string> modes{"as-given"};
  std::string format = "json";
  std::string out_path;

  const std::vector<std::string> mode_names{"as-given", "involution-class", "sigma-class",
                                            "lemma-augmented"};

  auto add_common = [&](CLI::App* sub, bool survey) {
    if (survey) {
      sub->add_option("--group", groups, "Catalog groups (repeatable): A5, S4, PSL(2,7), D8, C6");
      sub->add_option("--genset", modes, "Generating-set modes (repeatable)")
          ->check(CLI::IsMember(mode_names));
    } else {
      auto* g = sub->add_option("--group", config.group, "Catalog group: A5, S4, PSL(2,7), D8, C6");
      auto* f = sub->add_option("--genset-file", config.genset_file, "Generating-set file")
                    ->check(CLI::ExistingFile);
      g->excludes(f);
      sub->add_option("--genset", modes.front(), "Generating-set mode")
          ->check(CLI::IsMember(mode_names));
    }
    sub->add_option("--max-order", config.max_order, "Element cap for enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-relation-len", config.max_relation_len, "Relation search cap")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", config.seed, "Sampling seed for verification");
    sub->add_option("--samples", config.samples, "Sampled identity checks in verify");
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
    sub->add_flag("--timings", config.timings, "Include wall time per phase");
  };

  auto* width = app.add_subcommand("width", "Exact palindromic width with bounds");
  auto* verify = app.add_subcommand("verify", "Run all applicable verification suites");
  auto* survey = app.add_subcommand("survey", "Width table over several groups and modes");
  add_common(width, false);
  add_common(verify, false);
  add_common(survey, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    config.format = format == "csv" ? OutputFormat::kCsv
                    : format == "text" ? OutputFormat::kText
                                       : OutputFormat::kJson;

    if (*width) {
      config.mode = parse_genset_mode(modes.front());
      AnalysisReport rep = analyze_width(config);
      switch (config.format) {
        case OutputFormat::kJson: emit(out_path, to_json(rep).dump(2) + "\n"); break;
        case OutputFormat::kCsv: emit(out_path, std::string(kCsvHeader) + "\n" + to_csv_row(rep) + "\n"); break;
        case OutputFormat::kText: emit(out_path, to_text(rep)); break;
      }
      return kOk;
    }

    if (*verify) {
      config.mode = parse_genset_mode(modes.front());
      VerifyReport rep = analyze_verify(config);
      if (config.format == OutputFormat::kText) {
        emit(out_path, to_text(rep));
      } else {
        emit(out_path, to_json(rep).dump(2) + "\n");
      }
      for (const auto& [name, verdict] : rep.verdicts) {
        if (verdict.starts_with("fail")) {
          return fail("verification_failed", name + ": " + verdict, kVerificationFailed);
        }
      }
      if (rep.inconclusive()) std::cerr << "warning: some suites were inconclusive\n";
      return kOk;
    }

    std::vector<GensetMode> parsed;
    for (const auto& m : modes) parsed.push_back(parse_genset_mode(m));
    auto rows = run_survey(config, groups, parsed);
    switch (config.format) {
      case OutputFormat::kJson: emit(out_path, survey_json(rows).dump(2) + "\n"); break;
      case OutputFormat::kCsv: emit(out_path, survey_csv(rows)); break;
      case OutputFormat::kText: emit(out_path, survey_text(rows)); break;
    }
    return kOk;
  } catch (const CapacityError& e) {
    return fail("capacity_exceeded", e.what(), kCapacity);
  } catch (const InvariantViolation& e) {
    return fail("verification_failed", e.what(), kVerificationFailed);
  } catch (const InvalidArgument& e) {
    return fail("invalid_input", e.what(), kInvalidInput);
  } catch (const Error& e) {
    return fail("error", e.what(), kInvalidInput);
  }
}
