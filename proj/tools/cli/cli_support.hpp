#pragma once

// Formatting and sweep helpers behind the command-line tool: complex literal
// parsing, JSON reports, CSV rows, and the SVG chart.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "koshliakov/identities.hpp"

namespace koshliakov::cli {

// "0.5", "-2e-3", "0.5+0.25i", "0.5-0.25i", "0.3i", "i", "-i"
inline std::optional<cd> parse_complex(const std::string& text) {
  auto num = [](std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size() && std::isfinite(out);
  };
  std::string_view s = text;
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    double re;
    if (!num(s, re)) return std::nullopt;
    return cd(re, 0);
  }
  s.remove_suffix(1);
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
  double re = 0, im;
  if (!re_part.empty() && !num(re_part, re)) return std::nullopt;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else if (!num(im_part, im)) {
    return std::nullopt;
  }
  return cd(re, im);
}

inline std::string format_double(double v, int digits = 17) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string format_complex_literal(cd v, int digits = 17) {
  if (v.imag() == 0) return format_double(v.real(), digits);
  std::string im = format_double(v.imag(), digits);
  if (im.front() != '-') im = "+" + im;
  return format_double(v.real(), digits) + im + "i";
}

inline nlohmann::ordered_json complex_json(cd v) { return nlohmann::ordered_json::array({v.real(), v.imag()}); }

inline nlohmann::ordered_json report_json(const VerificationReport& r, const std::string& profile) {
  using J = nlohmann::ordered_json;
  J params = J::object();
  for (const auto& p : r.params) {
    switch (p.kind) {
      case ReportParam::Kind::real: params[p.name] = p.value.real(); break;
      case ReportParam::Kind::complex: params[p.name] = complex_json(p.value); break;
      case ReportParam::Kind::integer: params[p.name] = static_cast<long long>(p.value.real()); break;
      case ReportParam::Kind::text: params[p.name] = p.text; break;
    }
  }
  J out = J::object();
  out["identity"] = r.identity_id;
  out["params"] = params;
  out["lhs"] = complex_json(r.lhs);
  out["rhs"] = complex_json(r.rhs);
  out["abs_diff"] = r.abs_diff;
  out["rel_diff"] = r.rel_diff;
  out["budgets"] = J{{"quad_error", r.budgets.quad_error},
                     {"truncation", r.budgets.truncation},
                     {"total", r.budgets.total()}};
  out["pass"] = r.pass;
  out["tolerance"] = r.tolerance;
  out["profile"] = profile;
  J notes = J::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  out["notes"] = notes;
  out["remarks"] = r.remarks;
  return out;
}

inline constexpr const char* csv_header = "alpha,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff,rel_diff";

struct SweepRow {
  double alpha = 0;
  std::optional<VerificationReport> report;  // empty when the point failed with an error
  std::string error;
};

inline std::string csv_row(const SweepRow& row) {
  std::string a = format_double(row.alpha);
  if (!row.report) return a + ",nan,nan,nan,nan,nan,nan";
  const auto& r = *row.report;
  return a + "," + format_double(r.lhs.real()) + "," + format_double(r.lhs.imag()) + "," +
         format_double(r.rhs.real()) + "," + format_double(r.rhs.imag()) + "," + format_double(r.abs_diff) + "," +
         format_double(r.rel_diff);
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(csv_header) + "\n";
  for (const auto& r : rows) out += csv_row(r) + "\n";
  return out;
}

struct SweepConfig {
  std::string identity_id;
  IdentityParams base;
  double alpha_min = 0.5, alpha_max = 2;
  int alpha_steps = 31;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (!(alpha_min > 0)) fail(ErrorCode::domain, "alpha_min must be positive");
    if (alpha_steps < 2) fail(ErrorCode::domain, "alpha_steps must be at least 2");
    if (!(alpha_min <= alpha_max)) fail(ErrorCode::domain, "alpha_min must not exceed alpha_max");
    if (alpha_min < 0.25 || alpha_max > 4) fail(ErrorCode::domain, "the alpha range must lie inside [1/4, 4]");
  }

  double alpha_at(int k) const {
    if (k == alpha_steps - 1) return alpha_max;
    return alpha_min + (alpha_max - alpha_min) * double(k) / double(alpha_steps - 1);
  }
};

// Rows are computed concurrently and returned in alpha order.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const IdentityInfo* info = find_identity(cfg.identity_id);
  if (!info) fail(ErrorCode::domain, "unknown identity '" + cfg.identity_id + "'");
  std::vector<SweepRow> rows(cfg.alpha_steps);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k; (k = next.fetch_add(1)) < cfg.alpha_steps;) {
      IdentityParams p = cfg.base;
      p.alpha = cfg.alpha_at(k);
      rows[k].alpha = p.alpha;
      try {
        rows[k].report = info->run(p);
      } catch (const Error& e) {
        rows[k].error = e.what();
      }
    }
  };
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, unsigned(cfg.alpha_steps));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

// Two stacked panels: log10 abs_diff and Re(lhs/rhs) against alpha.
inline std::string sweep_svg(const std::vector<SweepRow>& rows, const std::string& title) {
  const double width = 720, height = 520, left = 80, right = 20, top = 40, panel_h = 190, gap = 60;
  std::vector<double> xs, diffs, quots;
  for (const auto& r : rows) {
    xs.push_back(r.alpha);
    if (r.report) {
      diffs.push_back(r.report->abs_diff);
      cd q = r.report->rhs != cd(0) ? r.report->lhs / r.report->rhs : cd(NAN, 0);
      quots.push_back(q.real());
    } else {
      diffs.push_back(NAN);
      quots.push_back(NAN);
    }
  }
  // abs_diff of exactly zero is drawn at the floor of the panel
  double floor_diff = 1e-20;
  for (double d : diffs)
    if (d > 0 && d < floor_diff) floor_diff = d;
  std::vector<double> logd;
  for (double d : diffs) logd.push_back(std::isnan(d) ? NAN : std::log10(std::max(d, floor_diff)));

  auto range = [](const std::vector<double>& v) {
    double lo = INFINITY, hi = -INFINITY;
    for (double x : v)
      if (std::isfinite(x)) lo = std::min(lo, x), hi = std::max(hi, x);
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      double pad = std::max(1e-9, 1e-6 * std::abs(hi));
      lo -= pad;
      hi += pad;
    }
    return std::pair{lo, hi};
  };
  auto [x0, x1] = range(xs);
  const double plot_w = width - left - right;
  auto fmt = [](double v) { return format_double(v, 6); };
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * plot_w; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
     << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
     << title << "</text>\n";

  auto panel = [&](const std::vector<double>& ys, double y_top, const std::string& label, const char* colour) {
    auto [y0, y1] = range(ys);
    auto py = [&](double y) { return y_top + panel_h - (y - y0) / (y1 - y0) * panel_h; };
    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect x=\"" << left << "\" y=\"" << y_top << "\" width=\"" << plot_w << "\" height=\"" << panel_h
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
      double yv = y0 + (y1 - y0) * k / 4, xv = x0 + (x1 - x0) * k / 4;
      os << "<line x1=\"" << left - 4 << "\" y1=\"" << fmt(py(yv)) << "\" x2=\"" << left << "\" y2=\"" << fmt(py(yv))
         << "\" stroke=\"black\"/>\n";
      os << "<text x=\"" << left - 6 << "\" y=\"" << fmt(py(yv) + 4) << "\" text-anchor=\"end\">" << fmt(yv)
         << "</text>\n";
      os << "<line x1=\"" << fmt(px(xv)) << "\" y1=\"" << y_top + panel_h << "\" x2=\"" << fmt(px(xv)) << "\" y2=\""
         << y_top + panel_h + 4 << "\" stroke=\"black\"/>\n";
      os << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << y_top + panel_h + 16 << "\" text-anchor=\"middle\">"
         << fmt(xv) << "</text>\n";
    }
    os << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << y_top - 6 << "\" text-anchor=\"middle\">" << label
       << "</text>\n";
    // one polyline per run of finite points
    std::string pts;
    auto flush = [&] {
      if (!pts.empty())
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"" << pts
           << "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(ys[i])) {
        flush();
        continue;
      }
      if (!pts.empty()) pts += ' ';
      pts += fmt(px(xs[i])) + "," + fmt(py(ys[i]));
    }
    flush();
    os << "</g>\n";
  };
  panel(logd, top + 20, "log10 |lhs - rhs| against alpha", "#1f5fa8");
  panel(quots, top + 20 + panel_h + gap, "Re(lhs / rhs) against alpha", "#b8420f");
  os << "</svg>\n";
  return os.str();
}

}  // namespace koshliakov::cli
