#include "hybsqi/io.hpp"

#include <cstdio>
#include <fstream>

#include "hybsqi/errors.hpp"

namespace hybsqi {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace

void write_solution_csv(const std::string& path, const Grid& grid,
                        const SolutionField& field, const Problem& problem) {
  auto out = open_out(path);
  const bool euler = problem.components == 3;
  if (euler) {
    out << "x,rho,u,p\n";
    for (int j = 0; j <= grid.m; ++j) {
      const EulerState s = EulerState::from_conserved(field.node(j), 1.4);
      out << format_sci(grid.x(j)) << ',' << format_sci(s.rho) << ',' << format_sci(s.u)
          << ',' << format_sci(s.p) << '\n';
    }
  } else {
    out << "x";
    for (int c = 0; c < field.components; ++c)
      out << ",u" << (field.components > 1 ? std::to_string(c) : "");
    out << '\n';
    for (int j = 0; j <= grid.m; ++j) {
      out << format_sci(grid.x(j));
      for (int c = 0; c < field.components; ++c) out << ',' << format_sci(field.at(j, c));
      out << '\n';
    }
  }
  finish(out, path);
}

void write_indicator_csv(const std::string& path,
                         std::span<const std::vector<std::uint8_t>> history) {
  auto out = open_out(path);
  for (const auto& row : history) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << static_cast<int>(row[j]);
    }
    out << '\n';
  }
  finish(out, path);
}

void write_diagnostics_csv(const std::string& path, std::span<const StepDiagnostics> steps) {
  auto out = open_out(path);
  out << "step,t,dt,alpha,weno_cells\n";
  for (const auto& s : steps)
    out << s.step << ',' << format_sci(s.time) << ',' << format_sci(s.dt) << ','
        << format_sci(s.alpha) << ',' << s.weno_cells << '\n';
  finish(out, path);
}

void write_convergence_csv(const std::string& path, std::span<const ErrorReport> rows,
                           bool gnuplot) {
  auto out = open_out(path);
  const char sep = gnuplot ? ' ' : ',';
  if (!gnuplot)
    out << "n,linf,order_linf,l1,order_l1,l2,order_l2,seconds,weno_pct\n";
  else
    out << "# n linf order_linf l1 order_l1 l2 order_l2 seconds weno_pct\n";
  const auto opt = [&](const std::optional<double>& v) {
    return v ? format_sci(*v) : std::string(gnuplot ? "nan" : "");
  };
  for (const auto& r : rows) {
    out << r.n << sep << format_sci(r.linf) << sep << opt(r.order_linf) << sep
        << format_sci(r.l1) << sep << opt(r.order_l1) << sep << format_sci(r.l2) << sep
        << opt(r.order_l2) << sep << format_sci(r.wall_seconds) << sep
        << format_sci(100.0 * r.weno_fraction) << '\n';
  }
  finish(out, path);
}

void write_efficiency_csv(const std::string& path, std::span<const TimingRow> rows) {
  auto out = open_out(path);
  // wide layout with ratio columns when the four standard schemes are present
  std::vector<int> ns;
  for (const auto& r : rows)
    if (ns.empty() || ns.back() != r.n) ns.push_back(r.n);
  const auto find = [&](const std::string& scheme, int n) -> const TimingRow* {
    for (const auto& r : rows)
      if (r.scheme == scheme && r.n == n) return &r;
    return nullptr;
  };
  bool wide = true;
  for (const char* s : {"hybrid4", "hybrid6", "weno3", "weno5"})
    for (const int n : ns) wide = wide && find(s, n) != nullptr;
  if (wide) {
    out << "n,hybrid4,hybrid6,weno3,weno5,hybrid4/weno3,hybrid6/weno5\n";
    for (const int n : ns) {
      const double h4 = find("hybrid4", n)->seconds;
      const double h6 = find("hybrid6", n)->seconds;
      const double w3 = find("weno3", n)->seconds;
      const double w5 = find("weno5", n)->seconds;
      out << n << ',' << format_sci(h4) << ',' << format_sci(h6) << ',' << format_sci(w3)
          << ',' << format_sci(w5) << ',' << format_sci(h4 / w3) << ','
          << format_sci(h6 / w5) << '\n';
    }
  } else {
    out << "scheme,n,seconds\n";
    for (const auto& r : rows)
      out << r.scheme << ',' << r.n << ',' << format_sci(r.seconds) << '\n';
  }
  finish(out, path);
}

void write_text_file(const std::string& path, const std::string& content) {
  auto out = open_out(path);
  out << content;
  finish(out, path);
}

}  // namespace hybsqi
