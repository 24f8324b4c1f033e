#include "modorb/render.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "modorb/error.hpp"
#include "modorb/json_io.hpp"

namespace modorb::render {
namespace {

std::string sig12(Real x) {
  if (x == 0) return "0";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  return buf;
}

std::vector<std::string> labels_of(const ModularDatum& d) {
  std::vector<std::string> out;
  for (const auto& m : d.modules()) out.push_back(m.label);
  return out;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "pretty") return Format::kPretty;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw InputError("format must be json, csv or pretty; got \"" + text + "\"");
}

std::string csv_complex(const Complex& z) {
  std::string im = sig12(z.imag());
  if (im.front() != '-') im = "+" + im;
  return "\"" + sig12(z.real()) + im + "*i\"";
}

std::string report(const ValidationReport& r, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson:
      return io::dump(io::to_json(r));
    case Format::kCsv:
      os << "check,passed,residual\n";
      for (const auto& c : r.checks()) os << c.name << "," << (c.passed ? "true" : "false") << "," << sig12(c.residual) << "\n";
      return os.str();
    case Format::kPretty:
      for (const auto& c : r.checks()) {
        os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name << " residual " << sig12(c.residual);
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
      }
      os << "overall: " << (r.passed() ? "PASS" : "FAIL") << "\n";
      return os.str();
  }
  return {};
}

std::string fusion_table(const FusionTensor& n, const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < n.rank(); ++i) {
    for (std::size_t j = i; j < n.rank(); ++j) {
      os << labels[i] << " × " << labels[j] << " = ";
      bool first = true;
      for (std::size_t m = 0; m < n.rank(); ++m) {
        const auto c = n(i, j, m);
        if (c == 0) continue;
        if (!first) os << " + ";
        if (c != 1) os << c << "·";
        os << labels[m];
        first = false;
      }
      if (first) os << "0";
      os << "\n";
    }
  }
  return os.str();
}

std::string fusion(const FusionResult& result, const std::vector<std::string>& labels, Format format) {
  const auto& n = result.tensor;
  std::ostringstream os;
  switch (format) {
    case Format::kPretty:
      os << fusion_table(n, labels);
      os << "max rounding residual: " << sig12(result.max_residual) << "\n";
      return os.str();
    case Format::kCsv:
      os << "i,j,m,N\n";
      for (std::size_t i = 0; i < n.rank(); ++i) {
        for (std::size_t j = 0; j < n.rank(); ++j) {
          for (std::size_t m = 0; m < n.rank(); ++m) {
            if (n(i, j, m) != 0) os << labels[i] << "," << labels[j] << "," << labels[m] << "," << n(i, j, m) << "\n";
          }
        }
      }
      return os.str();
    case Format::kJson: {
      io::json entries = io::json::array();
      for (std::size_t i = 0; i < n.rank(); ++i) {
        for (std::size_t j = 0; j < n.rank(); ++j) {
          for (std::size_t m = 0; m < n.rank(); ++m) {
            if (n(i, j, m) != 0) entries.push_back({{"i", labels[i]}, {"j", labels[j]}, {"m", labels[m]}, {"N", n(i, j, m)}});
          }
        }
      }
      return io::dump({{"fusion", entries},
                       {"max_residual", io::format_real(result.max_residual)},
                       {"nonnegative", result.nonnegative}});
    }
  }
  return {};
}

std::string t_matrix(const ModularDatum& d, Format format) {
  const auto t = modorb::t_matrix(d);
  const auto labels = labels_of(d);
  std::ostringstream os;
  switch (format) {
    case Format::kPretty:
      for (std::size_t i = 0; i < t.size(); ++i) {
        os << labels[i] << "  h=" << to_string(d.modules()[i].h) << "  angle=" << to_string(t[i].angle()) << "\n";
      }
      return os.str();
    case Format::kCsv:
      os << "label,h,angle,value\n";
      for (std::size_t i = 0; i < t.size(); ++i) {
        os << labels[i] << "," << to_string(d.modules()[i].h) << "," << to_string(t[i].angle()) << ","
           << csv_complex(t[i].value()) << "\n";
      }
      return os.str();
    case Format::kJson: {
      io::json rows = io::json::array();
      for (std::size_t i = 0; i < t.size(); ++i) {
        rows.push_back({{"label", labels[i]}, {"angle", to_string(t[i].angle())}, {"value", io::complex_to_json(t[i].value())}});
      }
      return io::dump({{"T", rows}});
    }
  }
  return {};
}

std::string quantum_dimensions(const ModularDatum& d, Format format) {
  const auto q = modorb::quantum_dimensions(d);
  const auto labels = labels_of(d);
  std::ostringstream os;
  switch (format) {
    case Format::kPretty:
      for (std::size_t i = 0; i < q.dims.size(); ++i) os << "qdim " << labels[i] << " = " << sig12(q.dims[i]) << "\n";
      os << "global dimension = " << sig12(q.global) << "\n";
      return os.str();
    case Format::kCsv:
      os << "label,qdim\n";
      for (std::size_t i = 0; i < q.dims.size(); ++i) os << labels[i] << "," << sig12(q.dims[i]) << "\n";
      os << "global," << sig12(q.global) << "\n";
      return os.str();
    case Format::kJson: {
      io::json dims = io::json::array();
      for (auto x : q.dims) dims.push_back(io::format_real(x));
      return io::dump({{"qdims", dims}, {"global", io::format_real(q.global)}});
    }
  }
  return {};
}

}  // namespace modorb::render
