#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "signlab/coeffs.hpp"

namespace signlab::coeffs {

namespace {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace

void write_table_csv(const CoeffTable& table, const std::filesystem::path& path,
                     bool with_checksum) {
  if (!table.is_integral())
    throw std::invalid_argument("coefficient cache: only integral tables are cached");

  std::string rows;
  for (long n = 1; n <= table.bound(); ++n) {
    rows += std::to_string(n);
    rows += ',';
    rows += table.a(n).get_str();
    rows += '\n';
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "# label=" << table.spec().label << '\n';
  out << "# level=" << table.spec().level << '\n';
  out << "# weight=" << table.spec().weight << '\n';
  out << "# bound=" << table.bound() << '\n';
  out << "# eigenform=" << (table.is_eigenform() ? 1 : 0) << '\n';
  if (with_checksum) out << "# sha256=" << sha256_hex(rows) << '\n';
  out << rows;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

CoeffTable read_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  std::map<std::string, std::string> header;
  std::string rows;
  std::vector<Int> a;
  long expected = 1;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      key.erase(key.find_last_not_of(' ') + 1);
      header[key] = line.substr(eq + 1);
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error(path.string() + ": malformed row '" + line + "'");
    long n = std::stol(line.substr(0, comma));
    if (n != expected)
      throw std::runtime_error(path.string() + ": rows must be n=1.. in order; got " +
                               std::to_string(n) + " expecting " + std::to_string(expected));
    a.emplace_back(line.substr(comma + 1));
    rows += line;
    rows += '\n';
    ++expected;
  }

  for (const char* key : {"label", "level", "weight", "bound"})
    if (!header.count(key))
      throw std::runtime_error(path.string() + ": missing '# " + std::string(key) + "=' header");
  const long bound = std::stol(header.at("bound"));
  if (bound != static_cast<long>(a.size()))
    throw std::runtime_error(path.string() + ": declared bound " + std::to_string(bound) +
                             " but " + std::to_string(a.size()) + " rows");
  if (auto it = header.find("sha256"); it != header.end())
    if (sha256_hex(rows) != it->second)
      throw std::runtime_error(path.string() + ": checksum mismatch");

  FormSpec spec;
  spec.label = header.at("label");
  spec.level = std::stol(header.at("level"));
  spec.weight = std::stoi(header.at("weight"));
  spec.generator = FixtureSource{path.string()};
  bool eigenform = true;
  if (auto it = header.find("eigenform"); it != header.end()) eigenform = it->second != "0";

  std::vector<Int> table(bound + 1, Int(0));
  for (long n = 1; n <= bound; ++n) table[n] = std::move(a[n - 1]);
  return CoeffTable::integral(std::move(spec), std::move(table), eigenform);
}

}  // namespace signlab::coeffs
