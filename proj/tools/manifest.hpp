#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "qgiso/json_io.hpp"

namespace qgcli {

/// Hex SHA-256 of a file's bytes; throws qg::Error if it cannot be read.
std::string sha256_file(const std::string& path);
std::string sha256_string(const std::string& bytes);

/// Provenance record written next to every output file.
class RunManifest {
 public:
  RunManifest(int argc, char** argv);

  void add_input(const std::string& path);
  void add_output(const std::string& path);
  qg::Json& config() { return config_; }

  /// Stops the clock and writes the manifest as pretty JSON.
  void write(const std::string& path) const;
  qg::Json to_json() const;

 private:
  std::vector<std::string> argv_;
  qg::Json config_ = qg::Json::object();
  qg::Json inputs_ = qg::Json::array();
  qg::Json outputs_ = qg::Json::array();
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qgcli
