#include "dgc/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>

#include "dgc/errors.hpp"

namespace dgc {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    raise(ErrorKind::ConfigError,
          "cannot create output directory " + dir.string() + ": " + ec.message());
  }
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) raise(ErrorKind::ConfigError, "cannot open " + path.string());
  os << content;
  if (!os) raise(ErrorKind::ConfigError, "write failed for " + path.string());
}

namespace {

std::map<std::string, std::filesystem::path> tree_files(
    const std::filesystem::path& root) {
  std::map<std::string, std::filesystem::path> out;
  if (!std::filesystem::exists(root)) return out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      out.emplace(std::filesystem::relative(e.path(), root).generic_string(),
                  e.path());
    }
  }
  return out;
}

bool same_bytes(const std::filesystem::path& a, const std::filesystem::path& b) {
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  if (!fa || !fb) return false;
  constexpr std::size_t kBuf = 1 << 16;
  std::string ba(kBuf, '\0'), bb(kBuf, '\0');
  while (true) {
    fa.read(ba.data(), kBuf);
    fb.read(bb.data(), kBuf);
    if (fa.gcount() != fb.gcount()) return false;
    if (!std::equal(ba.begin(), ba.begin() + fa.gcount(), bb.begin()))
      return false;
    if (fa.eof() && fb.eof()) return true;
    if (fa.eof() != fb.eof()) return false;
  }
}

}  // namespace

bool directory_trees_identical(const std::filesystem::path& a,
                               const std::filesystem::path& b) {
  auto fa = tree_files(a);
  auto fb = tree_files(b);
  if (fa.size() != fb.size()) return false;
  for (const auto& [rel, pa] : fa) {
    auto it = fb.find(rel);
    if (it == fb.end()) return false;
    if (!same_bytes(pa, it->second)) return false;
  }
  return true;
}

}  // namespace dgc
