#include "rlce/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include "rlce/errors.hpp"
#include "rlce/wire.hpp"

namespace rlce::cli {

namespace {

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRng>(*seed);
  return std::make_unique<SystemRng>();
}

Params resolve_params(const std::optional<int>& level,
                      const std::optional<Params>& explicit_params) {
  if (level && explicit_params) {
    throw InvalidParameters("--level and explicit parameters are mutually "
                            "exclusive");
  }
  if (level) return recommended_params(*level);
  if (explicit_params) {
    Params p = *explicit_params;
    p.validate();
    return p;
  }
  throw InvalidParameters("either --level or explicit parameters required");
}

std::vector<std::uint8_t> read_message_bytes(const std::string& path) {
  if (path == "-") {
    std::vector<std::uint8_t> bytes;
    char buf[4096];
    while (std::cin.read(buf, sizeof(buf)) || std::cin.gcount() > 0) {
      bytes.insert(bytes.end(), buf, buf + std::cin.gcount());
      if (!std::cin) break;
    }
    return bytes;
  }
  return read_file(path);
}

// Exit-code policy shared by every subcommand: parameter and usage problems
// exit 2, I/O failures 3, malformed or mismatched files 4, decryption
// failures 5.
template <typename Fn>
int run_command(Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const KeyMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const UnknownLevel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

struct OutputSink {
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

const char* class_name(analysis::CodeClass c) {
  return c == analysis::CodeClass::kRandomLike ? "random-like" : "GRS-like";
}

int analyze_square(const AnalyzeOptions& opt);
int analyze_distinguish(const AnalyzeOptions& opt);
int analyze_isd(const AnalyzeOptions& opt);
int analyze_equiv(const AnalyzeOptions& opt);

}  // namespace

std::size_t max_message_bytes(const Params& params) {
  const std::size_t capacity_bits = std::size_t{params.m} * params.k;
  if (capacity_bits / 8 < 2) return 0;
  return capacity_bits / 8 - 2;
}

std::vector<GfElem> pack_message(std::span<const std::uint8_t> bytes,
                                 const Params& params) {
  if (bytes.size() > max_message_bytes(params)) {
    throw InvalidParameters("message of " + std::to_string(bytes.size()) +
                            " bytes exceeds capacity of " +
                            std::to_string(max_message_bytes(params)) +
                            " bytes");
  }
  std::vector<std::uint8_t> framed;
  framed.reserve(bytes.size() + 2);
  framed.push_back(static_cast<std::uint8_t>(bytes.size() >> 8));
  framed.push_back(static_cast<std::uint8_t>(bytes.size() & 0xFF));
  framed.insert(framed.end(), bytes.begin(), bytes.end());

  std::vector<GfElem> elems(params.k, 0);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    GfElem e = 0;
    for (int b = 0; b < params.m; ++b, ++bit) {
      const std::size_t byte = bit / 8;
      const int in_bit = 7 - static_cast<int>(bit % 8);
      const int v = byte < framed.size() ? (framed[byte] >> in_bit) & 1 : 0;
      e = static_cast<GfElem>((e << 1) | v);
    }
    elems[i] = e;
  }
  return elems;
}

std::optional<std::vector<std::uint8_t>> unpack_message(
    std::span<const GfElem> elements, const Params& params) {
  if (elements.size() != params.k) return std::nullopt;
  std::vector<std::uint8_t> framed((std::size_t{params.m} * params.k + 7) / 8,
                                   0);
  std::size_t bit = 0;
  for (GfElem e : elements) {
    for (int b = params.m - 1; b >= 0; --b, ++bit) {
      if ((e >> b) & 1) framed[bit / 8] |= 1u << (7 - bit % 8);
    }
  }
  if (framed.size() < 2) return std::nullopt;
  const std::size_t len = (std::size_t{framed[0]} << 8) | framed[1];
  if (len > max_message_bytes(params)) return std::nullopt;
  return std::vector<std::uint8_t>(framed.begin() + 2,
                                   framed.begin() + 2 + len);
}

int cmd_keygen(const KeygenOptions& opt) {
  return run_command([&] {
    const Params params = resolve_params(opt.level, opt.explicit_params);
    auto rng = make_rng(opt.seed);
    KeyPair pair = keygen(params, *rng, opt.systematic);
    const auto pub_bytes = serialize_public_key(pair.pub);
    const auto priv_bytes = serialize_private_key(pair.priv);
    write_file(opt.pub_path, pub_bytes);
    write_file(opt.priv_path, priv_bytes);
    std::cout << "n=" << params.n << " k=" << params.k << " t=" << params.t
              << " r=" << int(params.r) << " m=" << int(params.m) << '\n'
              << "public key:  " << pub_bytes.size() << " bytes ("
              << (opt.systematic ? "systematic" : "full") << ") -> "
              << opt.pub_path << '\n'
              << "private key: " << priv_bytes.size() << " bytes -> "
              << opt.priv_path << '\n';
    return kExitOk;
  });
}

int cmd_encrypt(const EncryptOptions& opt) {
  return run_command([&] {
    PublicKey pk = read_public_key(opt.pub_path);
    const std::vector<std::uint8_t> message = read_message_bytes(opt.input_path);
    const std::vector<GfElem> packed = pack_message(message, pk.params);
    auto rng = make_rng(opt.seed);
    Ciphertext ct = encrypt(pk, packed, *rng);
    write_ciphertext(opt.output_path, ct);
    std::cout << "ciphertext: " << serialize_ciphertext(ct).size()
              << " bytes -> " << opt.output_path << '\n';
    return kExitOk;
  });
}

int cmd_decrypt(const DecryptOptions& opt) {
  return run_command([&] {
    PrivateKey sk = read_private_key(opt.priv_path);
    PublicKey pk = read_public_key(opt.pub_path);
    Ciphertext ct = read_ciphertext(opt.input_path);
    std::optional<Row> message = decrypt(sk, pk, ct);
    if (!message) {
      std::cerr << "error: decryption failed\n";
      return kExitCrypto;
    }
    auto bytes = unpack_message(*message, sk.params);
    if (!bytes) {
      std::cerr << "error: decryption failed\n";
      return kExitCrypto;
    }
    write_file(opt.output_path, *bytes);
    std::cout << "plaintext: " << bytes->size() << " bytes -> "
              << opt.output_path << '\n';
    return kExitOk;
  });
}

int cmd_params(const ParamsOptions& opt) {
  return run_command([&] {
    const Params p = resolve_params(opt.level, opt.explicit_params);
    const std::uint64_t sys_bits = public_key_size_bits(p, true);
    const std::uint64_t full_bits = public_key_size_bits(p, false);
    std::cout << "n=" << p.n << " k=" << p.k << " t=" << p.t << " r="
              << int(p.r) << " m=" << int(p.m) << " q=" << (1u << p.m) << '\n'
              << "public code length n(r+1): " << p.public_length() << '\n'
              << "systematic public key: " << sys_bits << " bits ("
              << (sys_bits + 7) / 8 << " bytes)\n"
              << "full public key:       " << full_bits << " bits ("
              << (full_bits + 7) / 8 << " bytes)\n"
              << "plaintext capacity:    " << max_message_bytes(p)
              << " bytes\n";
    return kExitOk;
  });
}

namespace {

int analyze_square(const AnalyzeOptions& opt) {
  Matrix gen;
  if (!opt.pub_path.empty()) {
    gen = read_public_key(opt.pub_path).G;
  } else if (opt.grs_n && opt.grs_k) {
    const int m = opt.field_degree.value_or(8);
    auto rng = make_rng(opt.seed);
    gen = GrsCode::random(make_field(m), *opt.grs_n, *opt.grs_k, *rng)
              .generator_matrix();
  } else {
    throw InvalidParameters("square mode needs --pub or --grs-n/--grs-k");
  }
  const analysis::SquareCodeReport rep = analysis::square_code_dimension(gen);
  OutputSink sink(opt.output_path);
  sink.stream() << "k,N,square_dim,bound,classification\n"
                << rep.k << ',' << rep.length << ',' << rep.square_dim << ','
                << rep.bound << ',' << class_name(rep.classification) << '\n';
  return kExitOk;
}

int analyze_distinguish(const AnalyzeOptions& opt) {
  Params params{60, 40, 10, 1, 8, 0};
  if (opt.full_scale) {
    params = recommended_params(80);
  }
  if (opt.explicit_params) params = *opt.explicit_params;
  params.validate();
  auto rng = make_rng(opt.seed);
  const auto reports = analysis::distinguisher_experiment(
      params, opt.trials, *rng, opt.puncture_limit);
  OutputSink sink(opt.output_path);
  sink.stream() << "trial_id,punctured_column,k,N,square_dim,bound,"
                   "classification\n";
  for (const auto& r : reports) {
    sink.stream() << r.trial << ',' << r.column << ',' << r.square.k << ','
                  << r.square.length << ',' << r.square.square_dim << ','
                  << r.square.bound << ',' << class_name(r.square.classification)
                  << '\n';
  }
  std::cerr << "random-like fraction: " << analysis::random_like_fraction(reports)
            << " over " << reports.size() << " punctures\n";
  return kExitOk;
}

int analyze_isd(const AnalyzeOptions& opt) {
  if (!opt.isd_n || !opt.isd_k || !opt.isd_t || !opt.isd_q) {
    throw InvalidParameters("isd mode needs --n, --k, --t and --q");
  }
  std::vector<analysis::IsdAlgorithm> algos;
  if (opt.isd_algorithm == "prange") {
    algos = {analysis::IsdAlgorithm::kPrange};
  } else if (opt.isd_algorithm == "lee-brickell") {
    algos = {analysis::IsdAlgorithm::kLeeBrickell};
  } else if (opt.isd_algorithm == "both") {
    algos = {analysis::IsdAlgorithm::kPrange,
             analysis::IsdAlgorithm::kLeeBrickell};
  } else {
    throw InvalidParameters("unknown isd algorithm: " + opt.isd_algorithm);
  }
  OutputSink sink(opt.output_path);
  sink.stream() << "algorithm,n,k,t,q,p,log2_iterations,log2_cost\n";
  for (analysis::IsdAlgorithm algo : algos) {
    const analysis::IsdEstimate est = analysis::isd_workfactor(
        *opt.isd_n, *opt.isd_k, *opt.isd_t, *opt.isd_q, algo);
    char iter_buf[64], cost_buf[64];
    std::snprintf(iter_buf, sizeof(iter_buf), "%.4Lf", est.log2_iterations);
    std::snprintf(cost_buf, sizeof(cost_buf), "%.4Lf", est.log2_cost);
    sink.stream() << (algo == analysis::IsdAlgorithm::kPrange ? "prange"
                                                              : "lee-brickell")
                  << ',' << est.n << ',' << est.k << ',' << est.t << ','
                  << est.q << ',' << est.p << ',' << iter_buf << ','
                  << cost_buf << '\n';
  }
  return kExitOk;
}

int analyze_equiv(const AnalyzeOptions& opt) {
  const std::uint16_t k = opt.equiv_k.value_or(3);
  const std::uint16_t n = opt.equiv_n.value_or(4);
  const int m = opt.field_degree.value_or(8);
  if (k == 0 || n < k) throw InvalidParameters("equiv mode needs n >= k >= 1");
  const std::size_t r = k - 1;  // square mixing blocks
  FieldPtr field = make_field(m);
  if (std::size_t{n} * (r + 1) > field->order()) {
    throw InvalidParameters("target code length n*k exceeds field size");
  }
  auto rng = make_rng(opt.seed);
  OutputSink sink(opt.output_path);
  sink.stream() << "trial,n,k,r,reconstructed,all_blocks_invertible\n";
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    GrsCode code = GrsCode::random(field, n, k, *rng);
    GrsCode target_code =
        GrsCode::random(field, std::size_t{n} * (r + 1), k, *rng);
    Matrix target = target_code.generator_matrix();
    auto blocks = analysis::construct_equivalent(target, code, r, *rng);
    bool exact = false;
    bool invertible = false;
    if (blocks) {
      Matrix gs = code.generator_matrix();
      Matrix rebuilt(field, k, target.cols());
      invertible = true;
      for (std::size_t i = 0; i < n; ++i) {
        Matrix block(field, k, r + 1);
        block.set_column(0, gs.column(i));
        block.set_columns(1, blocks->c_blocks[i]);
        rebuilt.set_columns(i * (r + 1), block * blocks->a_blocks[i]);
        if (!blocks->a_blocks[i].try_inverse()) invertible = false;
      }
      exact = rebuilt == target;
    }
    sink.stream() << trial << ',' << n << ',' << k << ',' << r << ','
                  << (exact ? 1 : 0) << ',' << (invertible ? 1 : 0) << '\n';
  }
  return kExitOk;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opt) {
  return run_command([&] {
    if (opt.mode == "square") return analyze_square(opt);
    if (opt.mode == "distinguish") return analyze_distinguish(opt);
    if (opt.mode == "isd") return analyze_isd(opt);
    if (opt.mode == "equiv") return analyze_equiv(opt);
    throw InvalidParameters("unknown analyze mode: " + opt.mode);
  });
}

}  // namespace rlce::cli
