#include "rlce/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rlce/errors.hpp"
#include "rlce/wire.hpp"

using namespace rlce;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  TempDir() {
    path = fs::temp_directory_path() /
           ("rlce_cli_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
  fs::path path;
};

std::vector<std::uint8_t> slurp(const std::string& path) {
  return read_file(path);
}

void spit(const std::string& path, std::span<const std::uint8_t> bytes) {
  write_file(path, bytes);
}

const Params kDesk{40, 20, 10, 1, 8, 0};

}  // namespace

TEST_CASE("message packing roundtrips and enforces capacity") {
  CHECK(cli::max_message_bytes(kDesk) == 18);  // 8*20/8 - 2
  std::vector<std::uint8_t> msg = {0xDE, 0xAD, 0xBE, 0xEF, 0x00, 0x01};
  auto packed = cli::pack_message(msg, kDesk);
  CHECK(packed.size() == kDesk.k);
  auto back = cli::unpack_message(packed, kDesk);
  REQUIRE(back.has_value());
  CHECK(*back == msg);

  CHECK(cli::unpack_message(cli::pack_message({}, kDesk), kDesk)->empty());
  CHECK_THROWS_AS(cli::pack_message(std::vector<std::uint8_t>(19, 1), kDesk),
                  InvalidParameters);

  // ten-bit field: elements straddle byte boundaries
  const Params wide{48, 20, 10, 1, 10, 0};
  std::vector<std::uint8_t> long_msg(cli::max_message_bytes(wide), 0xA5);
  CHECK(*cli::unpack_message(cli::pack_message(long_msg, wide), wide) ==
        long_msg);
}

TEST_CASE("keygen is deterministic under a fixed seed") {
  TempDir dir;
  cli::KeygenOptions opt;
  opt.explicit_params = kDesk;
  opt.pub_path = dir.file("a.pub");
  opt.priv_path = dir.file("a.key");
  opt.seed = 7;
  REQUIRE(cli::cmd_keygen(opt) == cli::kExitOk);

  cli::KeygenOptions opt2 = opt;
  opt2.pub_path = dir.file("b.pub");
  opt2.priv_path = dir.file("b.key");
  REQUIRE(cli::cmd_keygen(opt2) == cli::kExitOk);

  CHECK(slurp(dir.file("a.pub")) == slurp(dir.file("b.pub")));
  CHECK(slurp(dir.file("a.key")) == slurp(dir.file("b.key")));
}

TEST_CASE("keygen rejects invalid parameters with exit 2") {
  TempDir dir;
  cli::KeygenOptions opt;
  opt.explicit_params = Params{40, 20, 12, 1, 8, 0};
  opt.pub_path = dir.file("x.pub");
  opt.priv_path = dir.file("x.key");
  CHECK(cli::cmd_keygen(opt) == cli::kExitUsage);

  cli::KeygenOptions both;
  both.level = 80;
  both.explicit_params = kDesk;
  both.pub_path = dir.file("y.pub");
  both.priv_path = dir.file("y.key");
  CHECK(cli::cmd_keygen(both) == cli::kExitUsage);
}

TEST_CASE("file round trip: keygen, encrypt, decrypt") {
  TempDir dir;
  cli::KeygenOptions kg;
  kg.explicit_params = kDesk;
  kg.pub_path = dir.file("k.pub");
  kg.priv_path = dir.file("k.key");
  kg.seed = 99;
  REQUIRE(cli::cmd_keygen(kg) == cli::kExitOk);

  const std::vector<std::uint8_t> message = {'h', 'e', 'l', 'l', 'o'};
  spit(dir.file("msg.bin"), message);

  cli::EncryptOptions enc;
  enc.pub_path = dir.file("k.pub");
  enc.input_path = dir.file("msg.bin");
  enc.output_path = dir.file("msg.ct");
  enc.seed = 100;
  REQUIRE(cli::cmd_encrypt(enc) == cli::kExitOk);

  cli::DecryptOptions dec;
  dec.priv_path = dir.file("k.key");
  dec.pub_path = dir.file("k.pub");
  dec.input_path = dir.file("msg.ct");
  dec.output_path = dir.file("msg.out");
  REQUIRE(cli::cmd_decrypt(dec) == cli::kExitOk);

  CHECK(slurp(dir.file("msg.out")) == message);
}

TEST_CASE("encrypt failure modes: oversize message and malformed key") {
  TempDir dir;
  cli::KeygenOptions kg;
  kg.explicit_params = kDesk;
  kg.pub_path = dir.file("k.pub");
  kg.priv_path = dir.file("k.key");
  kg.seed = 1;
  REQUIRE(cli::cmd_keygen(kg) == cli::kExitOk);

  spit(dir.file("big.bin"), std::vector<std::uint8_t>(19, 0x41));
  cli::EncryptOptions enc;
  enc.pub_path = dir.file("k.pub");
  enc.input_path = dir.file("big.bin");
  enc.output_path = dir.file("big.ct");
  CHECK(cli::cmd_encrypt(enc) == cli::kExitUsage);

  auto bytes = slurp(dir.file("k.pub"));
  bytes.resize(bytes.size() / 2);
  spit(dir.file("trunc.pub"), bytes);
  enc.pub_path = dir.file("trunc.pub");
  enc.input_path = dir.file("big.bin");
  CHECK(cli::cmd_encrypt(enc) == cli::kExitFormat);

  enc.pub_path = dir.file("missing.pub");
  CHECK(cli::cmd_encrypt(enc) == cli::kExitIo);
}

TEST_CASE("decrypt failure modes: wrong length, garbage, no partial output") {
  TempDir dir;
  cli::KeygenOptions kg;
  kg.explicit_params = kDesk;
  kg.pub_path = dir.file("k.pub");
  kg.priv_path = dir.file("k.key");
  kg.seed = 2;
  REQUIRE(cli::cmd_keygen(kg) == cli::kExitOk);

  // random vector dressed as a ciphertext
  SeededRng rng(3);
  Ciphertext junk{kDesk, Row(kDesk.public_length())};
  for (auto& e : junk.y) e = static_cast<GfElem>(rng.below(256));
  write_ciphertext(dir.file("junk.ct"), junk);

  cli::DecryptOptions dec;
  dec.priv_path = dir.file("k.key");
  dec.pub_path = dir.file("k.pub");
  dec.input_path = dir.file("junk.ct");
  dec.output_path = dir.file("junk.out");
  CHECK(cli::cmd_decrypt(dec) == cli::kExitCrypto);
  CHECK_FALSE(fs::exists(dir.file("junk.out")));

  // header claims a shorter vector than the payload carries
  auto ct_bytes = serialize_ciphertext(junk);
  ct_bytes.resize(ct_bytes.size() - 4);
  spit(dir.file("short.ct"), ct_bytes);
  dec.input_path = dir.file("short.ct");
  dec.output_path = dir.file("short.out");
  CHECK(cli::cmd_decrypt(dec) == cli::kExitFormat);
  CHECK_FALSE(fs::exists(dir.file("short.out")));
}

TEST_CASE("params subcommand prints the registry rows") {
  cli::ParamsOptions opt;
  opt.level = 80;
  CHECK(cli::cmd_params(opt) == cli::kExitOk);
  cli::ParamsOptions bad;
  bad.level = 100;
  CHECK(cli::cmd_params(bad) == cli::kExitUsage);
}

TEST_CASE("analyze subcommands emit parsable CSV") {
  TempDir dir;

  cli::AnalyzeOptions isd;
  isd.mode = "isd";
  isd.isd_n = 1120;
  isd.isd_k = 380;
  isd.isd_t = 90;
  isd.isd_q = 256;
  isd.output_path = dir.file("isd.csv");
  REQUIRE(cli::cmd_analyze(isd) == cli::kExitOk);
  {
    std::ifstream in(dir.file("isd.csv"));
    std::string header, prange_line, lb_line;
    REQUIRE(std::getline(in, header));
    CHECK(header == "algorithm,n,k,t,q,p,log2_iterations,log2_cost");
    REQUIRE(std::getline(in, prange_line));
    REQUIRE(std::getline(in, lb_line));
    CHECK(prange_line.substr(0, 7) == "prange,");
    CHECK(lb_line.substr(0, 13) == "lee-brickell,");
  }

  cli::AnalyzeOptions square;
  square.mode = "square";
  square.grs_n = 32;
  square.grs_k = 8;
  square.seed = 5;
  square.output_path = dir.file("square.csv");
  REQUIRE(cli::cmd_analyze(square) == cli::kExitOk);
  {
    std::ifstream in(dir.file("square.csv"));
    std::string header, line;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, line));
    CHECK(line == "8,32,15,32,GRS-like");
  }

  cli::AnalyzeOptions dist;
  dist.mode = "distinguish";
  dist.trials = 1;
  dist.puncture_limit = 3;
  dist.seed = 6;
  dist.output_path = dir.file("dist.csv");
  REQUIRE(cli::cmd_analyze(dist) == cli::kExitOk);
  {
    std::ifstream in(dir.file("dist.csv"));
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "trial_id,punctured_column,k,N,square_dim,bound,classification");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
      CHECK(line.find("random-like") != std::string::npos);
      ++rows;
    }
    CHECK(rows == 3);
  }

  cli::AnalyzeOptions equiv;
  equiv.mode = "equiv";
  equiv.equiv_k = 3;
  equiv.equiv_n = 4;
  equiv.trials = 4;
  equiv.seed = 7;
  equiv.output_path = dir.file("equiv.csv");
  REQUIRE(cli::cmd_analyze(equiv) == cli::kExitOk);
  {
    std::ifstream in(dir.file("equiv.csv"));
    std::string header, line;
    REQUIRE(std::getline(in, header));
    while (std::getline(in, line)) {
      CHECK(line.substr(line.size() - 3) == "1,1");
    }
  }

  cli::AnalyzeOptions bad;
  bad.mode = "nonsense";
  CHECK(cli::cmd_analyze(bad) == cli::kExitUsage);
}
