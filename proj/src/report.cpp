#include "gaplab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

namespace gaplab {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_dump(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  const fs::path tmp = dir / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(),
                                      "cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::system_error(errno, std::generic_category(),
                                      "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw std::system_error(ec, "cannot rename report into place");
}

}  // namespace gaplab
