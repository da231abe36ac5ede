#include <charconv>
#include <cmath>

#include "json.hpp"
#include "qslab/verify.hpp"

namespace qslab {

namespace {

using Json = nlohmann::ordered_json;

// inf has no JSON number form
Json real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

Json config_json(const SuiteConfig& c) {
  Json alphas = Json::array(), ps = Json::array();
  for (double a : c.alphas) alphas.push_back(real(a));
  for (double p : c.ps) ps.push_back(real(p));
  Json j;
  j["suite"] = c.suite;
  j["n"] = c.n;
  j["N"] = c.N;
  j["alpha"] = alphas;
  j["p"] = ps;
  j["seed"] = c.seed;
  j["tol"] = c.tol_scale;
  j["quad"] = std::to_string(c.quad.radial) + "x" + std::to_string(c.quad.angular);
  return j;
}

Json record_json(const CheckRecord& r) {
  Json j;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["inputs"] = r.inputs;
  j["inputs_digest"] = r.inputs_digest;
  j["samples"] = r.samples;
  j["measured"] = real(r.measured);
  j["bound"] = real(r.bound);
  j["pass"] = r.pass;
  if (!r.extra.empty()) {
    Json e = Json::object();
    for (const auto& [k, v] : r.extra) e[k] = real(v);
    j["extra"] = e;
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace

std::string report_json(const SuiteReport& r, bool include_timing) {
  Json records = Json::array();
  std::size_t failed = 0;
  for (const auto& rec : r.records) {
    records.push_back(record_json(rec));
    if (!rec.pass) ++failed;
  }
  Json meta;
  meta["tool"] = "qslab";
  meta["version"] = "0.1.0";
  meta["config"] = config_json(r.config);
  meta["summary"] = {{"checks", r.records.size()}, {"passed", r.records.size() - failed}, {"failed", failed}};
  meta["digest"] = fnv1a_hex(meta.dump() + records.dump());

  Json out;
  out["meta"] = meta;
  out["records"] = records;
  if (include_timing) {
    Json checks = Json::object();
    for (const auto& rec : r.records) checks[rec.id] = rec.wall_ms;
    out["timing"] = {{"total_ms", r.total_ms}, {"checks", checks}};
  }
  return out.dump(2) + "\n";
}

QuadratureResolution parse_quad(const std::string& s) {
  const std::size_t x = s.find('x');
  QuadratureResolution q{0, 0};
  if (x != std::string::npos) {
    const auto a = std::from_chars(s.data(), s.data() + x, q.radial);
    const auto b = std::from_chars(s.data() + x + 1, s.data() + s.size(), q.angular);
    if (a.ec == std::errc() && a.ptr == s.data() + x && b.ec == std::errc() && b.ptr == s.data() + s.size() &&
        q.radial > 0 && q.angular > 0)
      return q;
  }
  throw ConfigError("quadrature must look like RxA with R, A >= 1, got \"" + s + "\"");
}

std::vector<double> parse_real_list(const std::string& s, bool allow_inf) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    const std::string item = s.substr(pos, end - pos);
    double v = 0.0;
    if (allow_inf && (item == "inf" || item == "Inf" || item == "INF")) {
      v = INFINITY;
    } else {
      const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || r.ec != std::errc() || r.ptr != item.data() + item.size() || !std::isfinite(v))
        throw ConfigError("bad number \"" + item + "\" in list \"" + s + "\"");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace qslab
