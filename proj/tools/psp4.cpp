// psp4: invariants of PSp4(2^f), brute-force checks, and recognition.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "psp4/arith.hpp"
#include "psp4/characterize.hpp"
#include "psp4/io.hpp"
#include "psp4/oracle.hpp"
#include "psp4/primegraph.hpp"
#include "psp4/selftest.hpp"
#include "psp4/sympl.hpp"

namespace {

using namespace psp4;
using io::Json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfigError = 2;

// Invalid user input, reported with exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sympl::FieldSize parse_q(const std::string& text) {
  try {
    return sympl::FieldSize::from_q(from_decimal(text));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void emit(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw ConfigError("cannot write " + *path);
  out << text;
}

std::uint64_t enumeration_cap() {
  const char* env = std::getenv("NSE_MAX_ENUM");
  if (!env || !*env) return 2'000'000;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw ConfigError(std::string("NSE_MAX_ENUM is not an integer: ") + env);
  }
}

// ---------------------------------------------------------------------

int run_compute(const std::string& q_text, const std::string& format,
                const std::optional<std::string>& out_dir) {
  const auto fs = parse_q(q_text);
  const auto table = sympl::nse_table(fs);
  const auto spectrum = sympl::spectrum(fs);
  const auto graph = primegraph::build_graph(spectrum, table.order);
  auto csv = [&] { return io::class_table_csv(sympl::class_table(fs)); };

  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    const std::filesystem::path dir(*out_dir);
    emit(io::to_json(table).dump(2) + "\n", (dir / "nse.json").string());
    emit(io::spectrum_json(spectrum).dump(2) + "\n",
         (dir / "spectrum.json").string());
    emit(io::to_json(graph).dump(2) + "\n",
         (dir / "prime_graph.json").string());
    if (fs.degree() <= sympl::kMaxClassTableDegree) {
      emit(csv(), (dir / "class_table.csv").string());
    } else {
      std::cerr << "class table skipped: f > "
                << sympl::kMaxClassTableDegree << "\n";
    }
    return kOk;
  }
  if (format == "csv") {
    if (fs.degree() > sympl::kMaxClassTableDegree) {
      throw ConfigError("class table is limited to f <= " +
                        std::to_string(sympl::kMaxClassTableDegree));
    }
    emit(csv(), std::nullopt);
    return kOk;
  }
  Json doc{{"nse", io::to_json(table)},
           {"spectrum", io::spectrum_json(spectrum)},
           {"prime_graph", io::to_json(graph)}};
  emit(doc.dump(2) + "\n", std::nullopt);
  return kOk;
}

int run_example_84(const std::optional<std::string>& out) {
  struct Named {
    std::string name;
    oracle::PermGroupSpec spec;
  };
  const Named groups[] = {
      {"Z4 x (Z7:Z3)", oracle::example_z4_times_f21()},
      {"Z3 x (Z7:Z4)", oracle::example_z3_times_z7z4()},
  };
  Json doc = Json::array();
  std::set<std::uint64_t> nse_sets[2];
  for (int k = 0; k < 2; ++k) {
    const auto h = oracle::perm_nse(groups[k].spec);
    for (const auto& [order, count] : h) nse_sets[k].insert(count);
    Json nse = Json::array();
    for (auto v : nse_sets[k]) nse.push_back(std::to_string(v));
    doc.push_back(Json{
        {"group", groups[k].name},
        {"histogram", io::to_json(h)},
        {"nse", nse},
        {"solutions_of_x3_eq_1",
         std::to_string(oracle::power_count(groups[k].spec, 3))}});
  }
  emit(doc.dump(2) + "\n", out);
  return nse_sets[0] == nse_sets[1] ? kOk : kFailure;
}

int run_oracle(const std::string& q_text, bool compare, std::uint64_t samples,
               const std::optional<std::string>& out) {
  const auto fs = parse_q(q_text);
  const std::uint64_t q = fs.q().get_ui();
  if (fs.degree() > 4) {
    throw ConfigError("the matrix oracle supports q <= 16");
  }
  const gf2::FieldSpec field(fs.degree());
  const auto gens = oracle::sp4_generators(field);
  const auto spectrum = sympl::spectrum(fs);
  const std::uint64_t max_order = spectrum.back().get_ui();

  if (samples > 0) {
    const auto h =
        oracle::sample_word_orders(gens, samples, 64, max_order, 0x5eed);
    emit(Json{{"q", std::to_string(q)},
              {"samples", std::to_string(samples)},
              {"orders", io::to_json(h)}}
                 .dump(2) +
             "\n",
         out);
    if (!compare) return kOk;
    for (const auto& [order, count] : h) {
      const bool ok =
          order != 0 && std::binary_search(spectrum.begin(), spectrum.end(),
                                           BigInt(order));
      if (!ok) {
        std::cerr << "sampled order " << order << " is outside the spectrum\n";
        return kFailure;
      }
    }
    return kOk;
  }

  const auto elements = oracle::enumerate_group(gens, enumeration_cap());
  const auto h = oracle::order_histogram(elements, max_order);
  emit(Json{{"q", std::to_string(q)}, {"histogram", io::to_json(h)}}.dump(2) +
           "\n",
       out);
  if (!compare) return kOk;
  const auto table = sympl::nse_table(fs);
  bool ok = BigInt(std::to_string(oracle::histogram_total(h))) == table.order &&
            h.size() == table.counts.size();
  for (const auto& [order, count] : table.counts) {
    const auto it = h.find(order.get_ui());
    const bool same = it != h.end() && BigInt(std::to_string(it->second)) == count;
    if (!same) {
      std::cerr << "mismatch at order " << to_decimal(order) << ": closed form "
                << to_decimal(count) << ", enumeration "
                << (it == h.end() ? 0 : it->second) << "\n";
    }
    ok = ok && same;
  }
  return ok ? kOk : kFailure;
}

int run_characterize(const std::string& order_text, const std::string& path,
                     const std::optional<std::string>& out) {
  BigInt order;
  try {
    order = from_decimal(order_text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::set<BigInt> nse;
  try {
    nse = io::read_nse(Json::parse(in));
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (nse.empty()) throw ConfigError(path + ": nse set is empty");
  const auto verdict = characterize::characterize(order, nse);
  emit(io::to_json(verdict).dump(2) + "\n", out);
  return kOk;
}

int run_catalan(std::uint64_t bound, const std::optional<std::string>& out) {
  if (bound < 2) throw ConfigError("--bound must be at least 2");
  emit(io::to_json(arith::search_catalan(bound)).dump(2) + "\n", out);
  return kOk;
}

int run_selftest() {
  bool ok = true;
  for (unsigned f : {2u, 3u}) {
    for (const auto& r : selftest::run(sympl::FieldSize::from_degree(f))) {
      std::cout << (r.passed ? "ok   " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      ok = ok && r.passed;
    }
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and recognition of PSp4(q), q = 2^f > 2"};
  app.require_subcommand(1);

  std::string q_text, format = "json", order_text, nse_path;
  std::optional<std::string> out;
  bool compare = false, example_84 = false;
  std::uint64_t samples = 0, bound = 1'000'000;

  auto* compute = app.add_subcommand("compute", "class table, nse, spectrum, prime graph");
  compute->add_option("--q", q_text, "q = 2^f > 2")->required();
  compute->add_option("--format", format, "json or csv (class table)")
      ->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--out", out, "directory for all four files");

  auto* orc = app.add_subcommand("oracle", "brute-force enumeration");
  auto* q_opt = orc->add_option("--q", q_text, "q = 2^f > 2, at most 16");
  orc->add_flag("--compare", compare, "fail on any disagreement with the closed forms");
  orc->add_option("--sample", samples, "sample random words instead of enumerating");
  auto* ex_opt = orc->add_flag("--example-84", example_84, "the two groups of order 84");
  orc->add_option("--out", out, "output file");
  q_opt->excludes(ex_opt);

  auto* chr = app.add_subcommand("characterize", "recognize PSp4(q) from order and nse");
  chr->add_option("--order", order_text, "group order")->required();
  chr->add_option("--nse-file", nse_path, "JSON array of decimal strings")->required();
  chr->add_option("--out", out, "output file");

  auto* cat = app.add_subcommand("catalan", "solutions of p^m = q^n + 1");
  cat->add_option("--bound", bound, "upper bound on p^m");
  cat->add_option("--out", out, "output file");

  app.add_subcommand("selftest", "closed-form invariants at q = 4 and 8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (compute->parsed()) return run_compute(q_text, format, out);
    if (orc->parsed()) {
      if (example_84) return run_example_84(out);
      if (q_text.empty()) throw ConfigError("oracle needs --q or --example-84");
      return run_oracle(q_text, compare, samples, out);
    }
    if (chr->parsed()) return run_characterize(order_text, nse_path, out);
    if (cat->parsed()) return run_catalan(bound, out);
    return run_selftest();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const oracle::CapacityError& e) {
    std::cerr << "error: " << e.what() << " (raise NSE_MAX_ENUM or use --sample)\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
