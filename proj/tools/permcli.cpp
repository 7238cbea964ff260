#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "permcode/oracle.hpp"
#include "permcode/rng.hpp"
#include "permcode/serial.hpp"

using namespace permcode;

namespace {

// Documented exit codes: 0 ok, 1 input/format failures, 2 bad parameters,
// 3 verification or lemma failures.
constexpr int kOk = 0;
constexpr int kFormatError = 1;
constexpr int kParamsError = 2;
constexpr int kVerifyFailure = 3;

struct JobConfig {
  std::string model;
  int n = 0;
  int t = 0;
  int m = -1;
  std::uint64_t seed = 1;
  long long samples = -1;
  bool exhaustive = false;
  std::string in_path;
  std::string out_path;
};

struct PatternFlags {
  std::vector<int> positions;
  int j = 0;
  int t1 = 0;
  int i1 = 0;
  bool positions_given = false;
  bool j_given = false;
  bool t1_given = false;
  bool i1_given = false;
};

struct Streams {
  std::istream* in = &std::cin;
  std::ostream* out = &std::cout;
  std::ifstream fin;
  std::ofstream fout;

  bool open(const JobConfig& cfg) {
    if (!cfg.in_path.empty()) {
      fin.open(cfg.in_path);
      if (!fin) {
        std::cerr << "cannot open input file: " << cfg.in_path << "\n";
        return false;
      }
      in = &fin;
    }
    if (!cfg.out_path.empty()) {
      fout.open(cfg.out_path);
      if (!fout) {
        std::cerr << "cannot open output file: " << cfg.out_path << "\n";
        return false;
      }
      out = &fout;
    }
    return true;
  }
};

bool blank(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

CodeParams make_params(const JobConfig& cfg) {
  if (cfg.model == "A") {
    if (cfg.m < 0) throw param_error("model A requires --m");
    return CodeParamsA::create(cfg.n, cfg.t, cfg.m);
  }
  if (cfg.model == "B") return CodeParamsB::create(cfg.n, cfg.t);
  if (cfg.model == "C") return CodeParamsC::create(cfg.n, cfg.t);
  throw param_error("model must be A, B, or C");
}

int data_length(const CodeParams& params) {
  return std::visit([](const auto& p) { return p.n; }, params);
}

int codeword_length(const CodeParams& params) {
  return std::visit([](const auto& p) { return p.codeword_length(); }, params);
}

Word encode_word(const CodeParams& params, const Word& data) {
  return std::visit(
      [&](const auto& p) -> Word {
        using T = std::decay_t<decltype(p)>;
        const Permutation sigma{data};
        if constexpr (std::is_same_v<T, CodeParamsA>)
          return encode_a(p, sigma).values();
        else if constexpr (std::is_same_v<T, CodeParamsB>)
          return encode_b(p, sigma).values();
        else
          return encode_c(p, sigma).values();
      },
      params);
}

Word decode_word(const CodeParams& params, const Word& received) {
  return std::visit(
      [&](const auto& p) -> Word {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CodeParamsA>)
          return decode_a(p, received).values();
        else if constexpr (std::is_same_v<T, CodeParamsB>)
          return decode_b(p, received).values();
        else
          return decode_c(p, received).values();
      },
      params);
}

VerifyScope make_scope(const JobConfig& cfg, int word_length) {
  if (cfg.exhaustive) return VerifyScope::exhaustive_words();
  if (cfg.samples >= 0) return VerifyScope::sampled(cfg.samples, cfg.seed);
  // default: exhaustive words only while the space stays small
  if (word_length <= 7) return VerifyScope::exhaustive_words();
  return VerifyScope::sampled(10000, cfg.seed);
}

int cmd_params(const JobConfig& cfg) {
  std::cout << "model " << cfg.model << " n=" << cfg.n << " t=" << cfg.t;
  if (cfg.model == "A") std::cout << " m=" << cfg.m;
  std::cout << "\n";
  CodeParams params;
  try {
    params = make_params(cfg);
  } catch (const param_error& e) {
    std::cout << "constraint violated: " << e.what() << "\n";
    return kParamsError;
  }
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        const int redundancy =
            std::is_same_v<T, CodeParamsA> ? p.t_prime : p.t_prime + 1;
        std::cout << "t_prime: " << p.t_prime << "\n"
                  << "codeword length: " << p.codeword_length() << "\n"
                  << "redundancy symbols: " << redundancy << "\n"
                  << "constraints: satisfied\n";
      },
      params);
  return kOk;
}

int cmd_encode(const JobConfig& cfg) {
  CodeParams params;
  try {
    params = make_params(cfg);
  } catch (const param_error& e) {
    std::cerr << e.what() << "\n";
    return kParamsError;
  }
  Streams io;
  if (!io.open(cfg)) return kFormatError;
  bool any_failed = false;
  bool header_written = false;
  std::string line;
  while (std::getline(*io.in, line)) {
    if (blank(line)) continue;
    if (!header_written) {
      *io.out << descriptor_to_json(params) << "\n";
      header_written = true;
    }
    try {
      const ParsedRecord rec = parse_record(line);
      if (rec.is_error) {
        *io.out << line << "\n";
        any_failed = true;
        continue;
      }
      if (rec.descriptor) throw malformed_error("unexpected descriptor record");
      if (!rec.word) throw malformed_error("expected a perm record");
      if (static_cast<int>(rec.word->size()) != data_length(params))
        throw malformed_error("data word has the wrong length");
      *io.out << perm_record(encode_word(params, *rec.word)) << "\n";
    } catch (const std::invalid_argument& e) {
      *io.out << error_record("malformed", e.what()) << "\n";
      any_failed = true;
    }
  }
  return any_failed ? kFormatError : kOk;
}

ErrorPattern choose_pattern(const JobConfig& cfg, const PatternFlags& flags,
                            const CodeParams& params, const Word& cw,
                            long long index) {
  const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(index);
  return std::visit(
      [&](const auto& p) -> ErrorPattern {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CodeParamsA>) {
          // data values sit t_prime above their encoded positions, so the
          // stuck-value threshold shifts by the marker count
          const int m_eff = p.m + p.t_prime + 1;
          if (flags.positions_given) return PatternA{flags.positions, m_eff};
          return random_pattern(Model::A, cw, p.t, m_eff, seed);
        } else if constexpr (std::is_same_v<T, CodeParamsB>) {
          if (flags.j_given) return PatternB{flags.j, flags.t1, 0};
          return random_pattern(Model::B, cw, p.t, 0, seed);
        } else {
          if (flags.i1_given) return PatternC{flags.i1, flags.t1, 0};
          return random_pattern(Model::C, cw, p.t, 0, seed);
        }
      },
      params);
}

// Explicit pattern flags must match the stream's model and come complete.
std::optional<std::string> flag_problem(const PatternFlags& flags,
                                        const CodeParams& params) {
  const bool is_a = std::holds_alternative<CodeParamsA>(params);
  const bool is_b = std::holds_alternative<CodeParamsB>(params);
  const bool is_c = std::holds_alternative<CodeParamsC>(params);
  if (flags.positions_given && !is_a)
    return "--positions applies to model A streams only";
  if (flags.j_given && !is_b) return "--j applies to model B streams only";
  if (flags.i1_given && !is_c) return "--i1 applies to model C streams only";
  if (flags.j_given && !flags.t1_given) return "--j requires --t1";
  if (flags.i1_given && !flags.t1_given) return "--i1 requires --t1";
  if (flags.t1_given && !flags.j_given && !flags.i1_given)
    return "--t1 requires --j or --i1";
  return std::nullopt;
}

int cmd_corrupt(const JobConfig& cfg, const PatternFlags& flags) {
  Streams io;
  if (!io.open(cfg)) return kFormatError;
  std::optional<CodeParams> params;
  bool any_failed = false;
  long long record_index = 0;
  std::string line;
  while (std::getline(*io.in, line)) {
    if (blank(line)) continue;
    try {
      const ParsedRecord rec = parse_record(line);
      if (rec.is_error) {
        *io.out << line << "\n";
        any_failed = true;
        continue;
      }
      if (rec.descriptor) {
        if (params) throw malformed_error("duplicate descriptor record");
        params = *rec.descriptor;
        if (const auto problem = flag_problem(flags, *params)) {
          std::cerr << *problem << "\n";
          return kParamsError;
        }
        *io.out << descriptor_to_json(*params) << "\n";
        continue;
      }
      if (!params) {
        *io.out << error_record("format", "missing descriptor header") << "\n";
        return kFormatError;
      }
      if (!rec.word) throw malformed_error("expected a perm record");
      const long long index = record_index++;
      if (static_cast<int>(rec.word->size()) != codeword_length(*params))
        throw malformed_error("codeword has the wrong length");
      const ErrorPattern pattern =
          choose_pattern(cfg, flags, *params, *rec.word, index);
      *io.out << word_record(inject(*rec.word, pattern), pattern) << "\n";
    } catch (const std::invalid_argument& e) {
      *io.out << error_record("malformed", e.what()) << "\n";
      any_failed = true;
    }
  }
  return any_failed ? kFormatError : kOk;
}

int cmd_decode(const JobConfig& cfg) {
  Streams io;
  if (!io.open(cfg)) return kFormatError;
  std::optional<CodeParams> params;
  bool any_failed = false;
  std::string line;
  while (std::getline(*io.in, line)) {
    if (blank(line)) continue;
    try {
      const ParsedRecord rec = parse_record(line);
      if (rec.is_error) {
        *io.out << line << "\n";
        any_failed = true;
        continue;
      }
      if (rec.descriptor) {
        if (params) throw malformed_error("duplicate descriptor record");
        params = *rec.descriptor;
        continue;
      }
      if (!params) {
        *io.out << error_record("format", "missing descriptor header") << "\n";
        return kFormatError;
      }
      if (!rec.word) throw malformed_error("expected a word record");
      *io.out << perm_record(decode_word(*params, *rec.word)) << "\n";
    } catch (const decode_error& e) {
      *io.out << error_record("capacity", e.what()) << "\n";
      any_failed = true;
    } catch (const std::invalid_argument& e) {
      *io.out << error_record("malformed", e.what()) << "\n";
      any_failed = true;
    }
  }
  return any_failed ? kFormatError : kOk;
}

int cmd_verify(const JobConfig& cfg, bool ambiguity) {
  CodeParams params;
  try {
    params = make_params(cfg);
  } catch (const param_error& e) {
    std::cerr << e.what() << "\n";
    return kParamsError;
  }
  Streams io;
  if (!io.open(cfg)) return kFormatError;
  const VerifyScope scope = make_scope(cfg, data_length(params));
  const VerificationReport report = std::visit(
      [&](const auto& p) {
        return ambiguity ? ambiguity_scan(p, scope)
                         : exhaustive_verify(p, scope);
      },
      params);
  *io.out << report_to_json(report) << "\n";
  return report.verified() ? kOk : kVerifyFailure;
}

int cmd_lemmas(const JobConfig& cfg, const std::string& lemma) {
  const auto id = lemma_from_name(lemma);
  if (!id) {
    std::cerr << "unknown lemma: " << lemma << "\n";
    return kParamsError;
  }
  Streams io;
  if (!io.open(cfg)) return kFormatError;
  VerificationReport report;
  try {
    report = lemma_suite(*id, cfg.n, cfg.t, make_scope(cfg, cfg.n));
  } catch (const param_error& e) {
    std::cerr << e.what() << "\n";
    return kParamsError;
  }
  *io.out << report_to_json(report) << "\n";
  return report.verified() ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stuck-at permutation code toolkit"};
  app.require_subcommand(1);

  JobConfig cfg;
  PatternFlags flags;
  std::string lemma;
  bool ambiguity = false;

  const auto add_code_opts = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "code model letter")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C"}));
    sub->add_option("--n", cfg.n, "data word length")->required();
    sub->add_option("--t", cfg.t, "error weight budget")->required();
    sub->add_option("--m", cfg.m, "stuck-value threshold (model A)");
  };
  const auto add_io_opts = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.in_path, "input file (default stdin)");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
  };
  const auto add_scope_opts = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "sampled data words");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_flag("--exhaustive", cfg.exhaustive, "enumerate all data words");
  };

  CLI::App* p_params =
      app.add_subcommand("params", "derive and check code parameters");
  add_code_opts(p_params);

  CLI::App* p_encode =
      app.add_subcommand("encode", "encode perm records into codewords");
  add_code_opts(p_encode);
  add_io_opts(p_encode);

  CLI::App* p_corrupt = app.add_subcommand(
      "corrupt", "inject channel errors into codeword records");
  add_io_opts(p_corrupt);
  p_corrupt->add_option("--seed", cfg.seed, "per-line pattern seed");
  p_corrupt->add_option("--positions", flags.positions,
                        "model A stuck positions, comma separated")
      ->delimiter(',');
  p_corrupt->add_option("--j", flags.j, "model B window floor value");
  p_corrupt->add_option("--t1", flags.t1, "window width / drop amount");
  p_corrupt->add_option("--i1", flags.i1, "model C stuck position");

  CLI::App* p_decode =
      app.add_subcommand("decode", "decode word records back to data perms");
  add_io_opts(p_decode);

  CLI::App* p_verify =
      app.add_subcommand("verify", "brute-force round-trip verification");
  add_code_opts(p_verify);
  add_scope_opts(p_verify);
  add_io_opts(p_verify);
  p_verify->add_flag("--ambiguity", ambiguity,
                     "scan for corruptions reachable from two codewords");

  CLI::App* p_lemmas =
      app.add_subcommand("lemmas", "independent lemma-law suites");
  p_lemmas->add_option("--lemma", lemma, "lemma id (L1..L7, P1, P2)")
      ->required();
  p_lemmas->add_option("--n", cfg.n, "word length parameter")->required();
  p_lemmas->add_option("--t", cfg.t, "lemma-specific weight parameter");
  add_scope_opts(p_lemmas);
  add_io_opts(p_lemmas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParamsError;
  }

  flags.positions_given = p_corrupt->count("--positions") > 0;
  flags.j_given = p_corrupt->count("--j") > 0;
  flags.t1_given = p_corrupt->count("--t1") > 0;
  flags.i1_given = p_corrupt->count("--i1") > 0;

  if (*p_params) return cmd_params(cfg);
  if (*p_encode) return cmd_encode(cfg);
  if (*p_corrupt) return cmd_corrupt(cfg, flags);
  if (*p_decode) return cmd_decode(cfg);
  if (*p_verify) return cmd_verify(cfg, ambiguity);
  if (*p_lemmas) return cmd_lemmas(cfg, lemma);
  return kParamsError;
}
