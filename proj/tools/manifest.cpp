#include "manifest.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "qgiso/error.hpp"

#ifndef QGISO_VERSION
#define QGISO_VERSION "unknown"
#endif

namespace qgcli {

namespace {

std::string hex(const unsigned char* data, unsigned len) {
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(data[i]);
  return os.str();
}

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) throw qg::Error("sha256 init failed");
  }
  void update(const char* p, std::size_t n) { EVP_DigestUpdate(ctx_.get(), p, n); }
  std::string finish() {
    unsigned char out[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx_.get(), out, &len);
    return hex(out, len);
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qg::Error("cannot read '" + path + "'");
  Sha256 h;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) h.update(buf, static_cast<std::size_t>(in.gcount()));
  return h.finish();
}

std::string sha256_string(const std::string& bytes) {
  Sha256 h;
  h.update(bytes.data(), bytes.size());
  return h.finish();
}

RunManifest::RunManifest(int argc, char** argv) : argv_(argv, argv + argc), start_(std::chrono::steady_clock::now()) {}

void RunManifest::add_input(const std::string& path) {
  inputs_.push_back(qg::Json{{"path", path}, {"sha256", sha256_file(path)}});
}

void RunManifest::add_output(const std::string& path) {
  outputs_.push_back(qg::Json{{"path", path}, {"sha256", sha256_file(path)}});
}

qg::Json RunManifest::to_json() const {
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return qg::Json{{"tool", "qgiso"},
                  {"version", QGISO_VERSION},
                  {"command_line", argv_},
                  {"config", config_},
                  {"inputs", inputs_},
                  {"outputs", outputs_},
                  {"wall_time_seconds", wall}};
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw qg::Error("cannot write manifest '" + path + "'");
  out << to_json().dump(2) << "\n";
}

}  // namespace qgcli
