// Copyright 2026 The Tabhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tabhash: command-line front end.
//
//   tabhash run --exp minwise --scheme tab-c2 --n 1024 --trials 1000 --seed 7
//   tabhash hash --scheme tab:c=4,char=8,out=32 --seed 0x42 --key 0102
//   tabhash hash --tables tables.tabh --key 0x0102
//   tabhash golden tables --out tables.tabh
//
// Exit status: 0 when the command completed (whatever the statistics say),
// 2 for usage and configuration errors, 1 for other failures.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/run.hpp"
#include "tabhash/scheme.hpp"
#include "tabhash/tab_prng.hpp"
#include "tabhash/table_file.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

// Hex word with optional 0x prefix; nullopt on anything else.
std::optional<std::uint64_t> parse_hex(std::string text) {
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text = text.substr(2);
  if (text.empty() || text.size() > 16) return std::nullopt;
  std::uint64_t v = 0;
  for (char ch : text) {
    int d;
    if (ch >= '0' && ch <= '9') {
      d = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      d = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      d = ch - 'A' + 10;
    } else {
      return std::nullopt;
    }
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw tabhash::ConfigError("bad seed '" + text + "'");
  return v;
}

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tabhash::ConfigError("cannot read config '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw tabhash::ConfigError("config '" + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tabhash: simple tabulation hashing laboratory"};
  app.require_subcommand(1);

  // run
  tabhash::RunConfig flags;
  std::string seed_text = "1";
  std::string config_path, save_config;
  auto* run = app.add_subcommand("run", "Run one experiment and write its report");
  run->add_option("--exp", flags.experiment,
                  "bins | linear-probing | cuckoo | minwise | similarity | fourth-moment | "
                  "independence");
  run->add_option("--scheme", flags.scheme,
                  "tab-c<c> | tab:c=,char=,out= | univ32 | univ64 | twoindep32 | twoindep64 | "
                  "poly<k> | poly:k=,p=,out= | random:key=,out=")
      ->capture_default_str();
  run->add_option("--spec", flags.spec,
                  "random | dense:start= | hypercube:A=,c= | cuckoo-hard | arith:start=,stride= "
                  "(each also takes n= and seed=)")
      ->capture_default_str();
  run->add_option("--n", flags.n, "Key set size (0: experiment default)");
  run->add_option("--m", flags.m, "Bins or table size, a power of two (0: default)");
  run->add_option("--trials", flags.trials, "Independent trials")->capture_default_str();
  run->add_option("--seed", seed_text, "Master seed; TABHASH_SEED overrides it")
      ->capture_default_str();
  run->add_option("--threads", flags.threads, "Worker threads (0: all cores)");
  run->add_option("--out", flags.out, "JSON report path");
  run->add_option("--csv", flags.csv, "Histogram CSV path (bucket,count)");
  run->add_option("--cdf", flags.cdf, "Per-run CSV path (run_index,value), sorted");
  run->add_option("--ops", flags.ops, "linear-probing: delete/insert cycles (0: n)");
  run->add_option("--k", flags.k, "similarity: sketch size")->capture_default_str();
  run->add_option("--nb", flags.nb, "similarity: |B|, taken as the first keys of A (0: n/4)");
  run->add_option("--subtrials", flags.subtrials, "cuckoo: sub-event trials (0: trials)");
  run->add_flag("--query-dependent", flags.query_dependent,
                "fourth-moment: select the bin from a query key's hash");
  run->add_option("--config", config_path, "Load a stored JSON configuration; flags override it");
  run->add_option("--save-config", save_config, "Write the effective configuration as JSON");

  // hash
  std::string scheme_text = "tab-c4", hash_seed = "0", key_text, tables_path;
  auto* hash = app.add_subcommand("hash", "Hash one key and print the value in hex");
  hash->add_option("--scheme", scheme_text, "Scheme, as for run")->capture_default_str();
  hash->add_option("--seed", hash_seed, "Scheme seed")->capture_default_str();
  hash->add_option("--key", key_text, "Key in hex")->required();
  hash->add_option("--tables", tables_path, "Load tabulation tables from a table file");

  // golden
  auto* golden = app.add_subcommand("golden", "Write reference files");
  golden->require_subcommand(1);
  std::string golden_out, golden_seed;
  unsigned g_c = 4, g_char = 8, g_out = 32, g_degree = 2, g_count = 16;
  std::uint32_t g_rows = 4;
  auto* g_tables = golden->add_subcommand("tables", "Dump seeded tabulation tables");
  g_tables->add_option("--out", golden_out, "Output path")->required();
  g_tables->add_option("--seed", golden_seed, "Seed (default 0x42)");
  g_tables->add_option("--c", g_c, "Characters")->capture_default_str();
  g_tables->add_option("--char", g_char, "Bits per character")->capture_default_str();
  g_tables->add_option("--out-bits", g_out, "Output bits")->capture_default_str();
  auto* g_prng = golden->add_subcommand("prng", "Dump the first outputs of a seeded generator");
  g_prng->add_option("--out", golden_out, "Output path")->required();
  g_prng->add_option("--seed", golden_seed, "Seed (default 0x1234)");
  g_prng->add_option("--R", g_rows, "Row length")->capture_default_str();
  g_prng->add_option("--degree", g_degree, "Polynomial degree")->capture_default_str();
  g_prng->add_option("--count", g_count, "Number of outputs")->capture_default_str();
  g_prng->add_option("--out-bits", g_out, "Output bits")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) {
      tabhash::RunConfig cfg = flags;
      if (!config_path.empty()) {
        cfg = load_json(config_path).get<tabhash::RunConfig>();
        // Explicit flags take precedence over the stored configuration.
        auto given = [&](const char* name) { return run->count(name) > 0; };
        if (given("--exp")) cfg.experiment = flags.experiment;
        if (given("--scheme")) cfg.scheme = flags.scheme;
        if (given("--spec")) cfg.spec = flags.spec;
        if (given("--n")) cfg.n = flags.n;
        if (given("--m")) cfg.m = flags.m;
        if (given("--trials")) cfg.trials = flags.trials;
        if (given("--threads")) cfg.threads = flags.threads;
        if (given("--out")) cfg.out = flags.out;
        if (given("--csv")) cfg.csv = flags.csv;
        if (given("--cdf")) cfg.cdf = flags.cdf;
        if (given("--ops")) cfg.ops = flags.ops;
        if (given("--k")) cfg.k = flags.k;
        if (given("--nb")) cfg.nb = flags.nb;
        if (given("--subtrials")) cfg.subtrials = flags.subtrials;
        if (given("--query-dependent")) cfg.query_dependent = flags.query_dependent;
        if (given("--seed")) cfg.seed = parse_seed(seed_text);
      } else {
        cfg.seed = parse_seed(seed_text);
      }
      if (cfg.experiment.empty()) throw tabhash::ConfigError("--exp is required");
      tabhash::apply_seed_override(cfg);
      if (!save_config.empty()) {
        std::ofstream out(save_config);
        if (!(out << nlohmann::json(cfg).dump(2) << "\n")) {
          throw tabhash::Error("cannot write '" + save_config + "'");
        }
      }
      tabhash::run(cfg, std::cout);
      return 0;
    }

    if (*hash) {
      const auto key = parse_hex(key_text);
      if (!key) {
        std::cerr << "error: malformed hex key '" << key_text << "'\n";
        return kUsageError;
      }
      std::optional<tabhash::SchemeHandle> h;
      unsigned key_bits = 0;
      if (!tables_path.empty()) {
        auto tab = tabhash::load_tables(tables_path);
        key_bits = tab.params().key_bits();
        h.emplace(std::move(tab));
      } else {
        const auto cfg = tabhash::parse_scheme(scheme_text);
        key_bits = tabhash::key_bits_of(cfg);
        h.emplace(tabhash::make_scheme(cfg, parse_seed(hash_seed)));
      }
      if (key_bits < 64 && (*key >> key_bits) != 0) {
        std::cerr << "error: key " << key_text << " exceeds " << key_bits << " bits\n";
        return kUsageError;
      }
      std::cout << hex((*h)(*key)) << "\n";
      return 0;
    }

    if (*g_tables) {
      tabhash::TabulationParams p{g_c, g_char, g_out};
      p.validate();
      const std::uint64_t seed = golden_seed.empty() ? 0x42 : parse_seed(golden_seed);
      tabhash::save_tables(golden_out, tabhash::TabulationScheme::from_seed(p, seed));
      return 0;
    }
    if (*g_prng) {
      const std::uint64_t seed = golden_seed.empty() ? 0x1234 : parse_seed(golden_seed);
      tabhash::save_prng_golden(golden_out,
                                tabhash::make_prng_golden(seed, g_rows, g_degree, g_out, g_count));
      return 0;
    }
  } catch (const tabhash::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}
