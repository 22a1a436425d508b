#pragma once

// Run manifests: what was run, with which inputs, and what it concluded. Hashes are SHA-256
// via OpenSSL, so anything including this header links OpenSSL::Crypto.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "seppack/errors.hpp"
#include "seppack/io/json.hpp"

namespace seppack::io {

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

struct RunManifest {
  std::vector<std::string> argv;       // arguments after the program name
  std::string command;                 // e.g. "code search"
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  std::map<std::string, std::string> artifacts; // name -> sha256 of its bytes
  Json verdicts = Json::object();
  int exit_code = 0;

  Json to_json() const {
    Json a = Json::object();
    for (const auto &[k, v] : artifacts)
      a[k] = v;
    return {{"argv", argv},   {"command", command}, {"parameters", parameters}, {"seed", seed},
            {"artifacts", a}, {"verdicts", verdicts}, {"exit_code", exit_code}};
  }

  static RunManifest from_json(const Json &j) {
    try {
      RunManifest m;
      m.argv = j.at("argv").get<std::vector<std::string>>();
      m.command = j.at("command").get<std::string>();
      m.parameters = j.at("parameters");
      m.seed = j.at("seed").get<std::uint64_t>();
      for (const auto &[k, v] : j.at("artifacts").items())
        m.artifacts[k] = v.get<std::string>();
      m.verdicts = j.at("verdicts");
      m.exit_code = j.at("exit_code").get<int>();
      return m;
    } catch (const Json::exception &e) {
      throw ParseError(std::string("bad manifest: ") + e.what());
    }
  }
};

} // namespace seppack::io
