#include "pathpack/params.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace pathpack {

void RunReport::write(std::ostream& out, bool include_time) const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", include_time ? wall_seconds : 0.0);
  out << "pathpack-report 1\n";
  out << "algorithm: " << algorithm << '\n';
  out << "value: " << value << '\n';
  out << "time_s: " << buf << '\n';
  out << "iterations: " << iterations << '\n';
  out << "converged: " << (converged ? "true" : "false") << '\n';
  out << "truncated: " << (truncated ? "true" : "false") << '\n';
  out << "seed: " << seed << '\n';
  out << "best_by_iteration:";
  for (int v : best_by_iteration) out << ' ' << v;
  out << '\n';
}

RunReport read_report(std::istream& in) {
  RunReport r;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line) || line != "pathpack-report 1") {
    throw ParseError(1, "expected 'pathpack-report 1' header");
  }
  while (std::getline(in, line)) {
    ++lineno;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno + 1, "expected 'key: value'");
    std::string key = line.substr(0, colon);
    std::istringstream val(line.substr(colon + 1));
    if (key == "algorithm") {
      val >> r.algorithm;
    } else if (key == "value") {
      val >> r.value;
    } else if (key == "time_s") {
      val >> r.wall_seconds;
    } else if (key == "iterations") {
      val >> r.iterations;
    } else if (key == "converged") {
      std::string b;
      val >> b;
      r.converged = (b == "true");
    } else if (key == "truncated") {
      std::string b;
      val >> b;
      r.truncated = (b == "true");
    } else if (key == "seed") {
      val >> r.seed;
    } else if (key == "best_by_iteration") {
      int v = 0;
      while (val >> v) r.best_by_iteration.push_back(v);
    } else {
      throw ParseError(lineno + 1, "unknown report key '" + key + "'");
    }
  }
  return r;
}

}  // namespace pathpack
