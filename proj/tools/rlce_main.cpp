#include <CLI11.hpp>

#include <cstdint>
#include <optional>

#include "rlce/cli.hpp"

namespace {

struct RawParams {
  std::optional<int> level;
  std::optional<std::uint16_t> n, k, t;
  std::optional<std::uint8_t> r, m;

  void add_flags(CLI::App& cmd) {
    cmd.add_option("--level", level, "security level (60, 80, 128, 192, 256)");
    cmd.add_option("--n", n, "code length");
    cmd.add_option("--k", k, "code dimension");
    cmd.add_option("--t", t, "error weight");
    cmd.add_option("--r", r, "random columns inserted per generator column");
    cmd.add_option("--m", m, "field degree (GF(2^m))");
  }

  std::optional<rlce::Params> explicit_params() const {
    if (!n && !k && !t && !r && !m) return std::nullopt;
    rlce::Params p;
    p.n = n.value_or(0);
    p.k = k.value_or(0);
    p.t = t.value_or(0);
    p.r = r.value_or(1);
    p.m = m.value_or(8);
    return p;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RLCE public-key encryption and code-analysis toolkit"};
  app.require_subcommand(1);

  rlce::cli::KeygenOptions keygen_opt;
  RawParams keygen_params;
  CLI::App* keygen = app.add_subcommand("keygen", "generate a keypair");
  keygen_params.add_flags(*keygen);
  keygen->add_option("--pub", keygen_opt.pub_path, "public key output path")
      ->required();
  keygen->add_option("--priv", keygen_opt.priv_path, "private key output path")
      ->required();
  keygen->add_option("--seed", keygen_opt.seed, "deterministic RNG seed");
  keygen->add_flag("--systematic", keygen_opt.systematic,
                   "store the public key in systematic form");

  rlce::cli::EncryptOptions encrypt_opt;
  CLI::App* encrypt = app.add_subcommand("encrypt", "encrypt a message");
  encrypt->add_option("--pub", encrypt_opt.pub_path, "public key path")
      ->required();
  encrypt->add_option("--in", encrypt_opt.input_path,
                      "message file ('-' for stdin)")
      ->required();
  encrypt->add_option("--out", encrypt_opt.output_path, "ciphertext output")
      ->required();
  encrypt->add_option("--seed", encrypt_opt.seed, "deterministic RNG seed");

  rlce::cli::DecryptOptions decrypt_opt;
  CLI::App* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext");
  decrypt->add_option("--priv", decrypt_opt.priv_path, "private key path")
      ->required();
  decrypt->add_option("--pub", decrypt_opt.pub_path,
                      "matching public key path (weight re-check)")
      ->required();
  decrypt->add_option("--in", decrypt_opt.input_path, "ciphertext path")
      ->required();
  decrypt->add_option("--out", decrypt_opt.output_path, "plaintext output")
      ->required();

  rlce::cli::ParamsOptions params_opt;
  RawParams params_params;
  CLI::App* params = app.add_subcommand("params", "inspect parameter sets");
  params_params.add_flags(*params);

  rlce::cli::AnalyzeOptions analyze_opt;
  RawParams analyze_params;
  CLI::App* analyze =
      app.add_subcommand("analyze", "square/distinguish/isd/equiv experiments");
  analyze->add_option("mode", analyze_opt.mode,
                      "one of: square, distinguish, isd, equiv")
      ->required();
  analyze->add_option("--out", analyze_opt.output_path,
                      "CSV output path (default stdout)");
  analyze->add_option("--pub", analyze_opt.pub_path,
                      "public key to analyze (square mode)");
  analyze->add_option("--grs-n", analyze_opt.grs_n, "fresh GRS length");
  analyze->add_option("--grs-k", analyze_opt.grs_k, "fresh GRS dimension");
  analyze->add_option("--n", analyze_opt.isd_n, "isd: public code length");
  analyze->add_option("--k", analyze_opt.isd_k, "isd: dimension");
  analyze->add_option("--t", analyze_opt.isd_t, "isd: error weight");
  analyze->add_option("--q", analyze_opt.isd_q, "isd: field size");
  analyze->add_option("--algorithm", analyze_opt.isd_algorithm,
                      "isd: prange, lee-brickell or both");
  analyze->add_option("--trials", analyze_opt.trials,
                      "distinguish/equiv: experiment count");
  analyze->add_option("--punctures", analyze_opt.puncture_limit,
                      "distinguish: columns to puncture (0 = all)");
  analyze->add_flag("--full-scale", analyze_opt.full_scale,
                    "distinguish: full n=560 scale (minutes per trial)");
  analyze->add_option("--dist-n", analyze_params.n, "distinguish: code length");
  analyze->add_option("--dist-k", analyze_params.k, "distinguish: dimension");
  analyze->add_option("--dist-t", analyze_params.t, "distinguish: error weight");
  analyze->add_option("--dist-r", analyze_params.r, "distinguish: insertions");
  analyze->add_option("--dist-m", analyze_params.m, "distinguish: field degree");
  analyze->add_option("--equiv-k", analyze_opt.equiv_k, "equiv: dimension");
  analyze->add_option("--equiv-n", analyze_opt.equiv_n, "equiv: block count");
  analyze->add_option("--field-degree", analyze_opt.field_degree,
                      "field degree for generated instances");
  analyze->add_option("--seed", analyze_opt.seed, "deterministic RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rlce::cli::kExitUsage;
  }

  if (keygen->parsed()) {
    keygen_opt.level = keygen_params.level;
    keygen_opt.explicit_params = keygen_params.explicit_params();
    return rlce::cli::cmd_keygen(keygen_opt);
  }
  if (encrypt->parsed()) return rlce::cli::cmd_encrypt(encrypt_opt);
  if (decrypt->parsed()) return rlce::cli::cmd_decrypt(decrypt_opt);
  if (params->parsed()) {
    params_opt.level = params_params.level;
    params_opt.explicit_params = params_params.explicit_params();
    return rlce::cli::cmd_params(params_opt);
  }
  if (analyze->parsed()) {
    analyze_opt.explicit_params = analyze_params.explicit_params();
    return rlce::cli::cmd_analyze(analyze_opt);
  }
  return rlce::cli::kExitUsage;
}
