#include "geodom/instance.hpp"

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace geodom {

std::string problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMwds: return "mwds";
    case ProblemKind::kMsds: return "msds";
    case ProblemKind::kLkc: return "lkc";
  }
  return "?";
}

ProblemKind problem_from_name(const std::string& name) {
  if (name == "mwds") return ProblemKind::kMwds;
  if (name == "msds") return ProblemKind::kMsds;
  if (name == "lkc") return ProblemKind::kLkc;
  throw std::invalid_argument("unknown problem kind: " + name);
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.problem != b.problem || a.k != b.k) return false;
  if (a.disks.size() != b.disks.size() || a.points.size() != b.points.size()) return false;
  for (size_t i = 0; i < a.disks.size(); ++i) {
    const Disk &x = a.disks[i], &y = b.disks[i];
    if (x.id != y.id || x.center.x != y.center.x || x.center.y != y.center.y ||
        x.radius != y.radius || x.weight != y.weight) {
      return false;
    }
  }
  for (size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].x != b.points[i].x || a.points[i].y != b.points[i].y) return false;
  }
  return true;
}

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& reason) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + reason);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double parse_double(const Line& line, const std::string& tok) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    fail(line.number, "non-numeric token '" + tok + "'");
  }
  if (used != tok.size()) fail(line.number, "non-numeric token '" + tok + "'");
  if (!std::isfinite(v)) fail(line.number, "non-finite value '" + tok + "'");
  return v;
}

long long parse_count(const Line& line, const std::string& tok) {
  const double v = parse_double(line, tok);
  if (v < 0 || v != std::floor(v)) fail(line.number, "expected a non-negative integer");
  return static_cast<long long>(v);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const auto lines = tokenize(text);
  size_t at = 0;
  auto next = [&]() -> const Line& {
    if (at >= lines.size()) {
      fail(lines.empty() ? 1 : lines.back().number, "unexpected end of file");
    }
    return lines[at++];
  };

  Instance inst;
  {
    const Line& l = next();
    if (l.tokens.size() != 2 || l.tokens[0] != "problem") fail(l.number, "expected 'problem <kind>'");
    try {
      inst.problem = problem_from_name(l.tokens[1]);
    } catch (const std::exception&) {
      fail(l.number, "unknown problem kind '" + l.tokens[1] + "'");
    }
  }
  long long m = 0;
  {
    const Line& l = next();
    if (l.tokens.size() != 2 || l.tokens[0] != "disks") fail(l.number, "expected 'disks <m>'");
    m = parse_count(l, l.tokens[1]);
    if (m <= 0) fail(l.number, "disk count must be positive");
  }
  for (long long i = 0; i < m; ++i) {
    const Line& l = next();
    if (l.tokens.size() != 4) fail(l.number, "expected 'x y r w'");
    Disk d;
    d.id = static_cast<int>(i);
    d.center.x = parse_double(l, l.tokens[0]);
    d.center.y = parse_double(l, l.tokens[1]);
    d.radius = parse_double(l, l.tokens[2]);
    d.weight = parse_double(l, l.tokens[3]);
    if (!(d.radius > 0.0)) fail(l.number, "radius must be positive");
    if (!(d.weight > 0.0)) fail(l.number, "weight must be positive");
    inst.disks.push_back(d);
  }

  if (inst.problem == ProblemKind::kLkc) {
    long long n = 0;
    {
      const Line& l = next();
      if (l.tokens.size() != 2 || l.tokens[0] != "points") fail(l.number, "expected 'points <n>'");
      n = parse_count(l, l.tokens[1]);
      if (n <= 0) fail(l.number, "point count must be positive");
    }
    for (long long i = 0; i < n; ++i) {
      const Line& l = next();
      if (l.tokens.size() != 2) fail(l.number, "expected 'x y'");
      Point p;
      p.x = parse_double(l, l.tokens[0]);
      p.y = parse_double(l, l.tokens[1]);
      if (p.y > 0.0) fail(l.number, "lkc point must lie on or below y = 0");
      inst.points.push_back(p);
    }
    {
      const Line& l = next();
      if (l.tokens.size() != 2 || l.tokens[0] != "k") fail(l.number, "expected 'k <K>'");
      const long long k = parse_count(l, l.tokens[1]);
      if (k <= 0) fail(l.number, "k must be positive");
      inst.k = static_cast<int>(k);
    }
    for (const Disk& d : inst.disks) {
      if (!(d.center.y > 0.0)) fail(lines.back().number, "lkc disk center must lie above y = 0");
    }
  }

  if (at != lines.size()) fail(lines[at].number, "trailing content");
  return inst;
}

std::string write_instance(const Instance& inst) {
  std::string out;
  out += "problem " + problem_name(inst.problem) + "\n";
  out += "disks " + std::to_string(inst.disks.size()) + "\n";
  for (const Disk& d : inst.disks) {
    out += fmt(d.center.x) + " " + fmt(d.center.y) + " " + fmt(d.radius) + " " + fmt(d.weight) + "\n";
  }
  if (inst.problem == ProblemKind::kLkc) {
    out += "points " + std::to_string(inst.points.size()) + "\n";
    for (const Point& p : inst.points) out += fmt(p.x) + " " + fmt(p.y) + "\n";
    out += "k " + std::to_string(inst.k) + "\n";
  }
  return out;
}

std::string instance_digest(const Instance& inst) {
  const std::string text = write_instance(inst);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

LkcInstance to_lkc(const Instance& inst) {
  if (inst.problem != ProblemKind::kLkc) throw std::invalid_argument("not an lkc instance");
  return make_lkc_instance(inst.disks, inst.points, inst.k);
}

}  // namespace geodom
