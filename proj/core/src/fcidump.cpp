#include "superfast/fcidump.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <regex>
#include <sstream>
#include <tuple>
#include <vector>

#include "superfast/errors.hpp"

namespace superfast {

namespace {

struct Record {
  double value;
  std::size_t i, j, k, l;
  std::size_t line;
};

constexpr double kConflictTolerance = 1e-10;

template <typename Store>
void store_checked(Store& seen, const typename Store::key_type& key, double value,
                   std::size_t line) {
  const auto [it, inserted] = seen.emplace(key, value);
  if (!inserted && std::abs(it->second - value) > kConflictTolerance) {
    throw ValidationError("record on line " + std::to_string(line) +
                          " conflicts with a symmetry-equivalent entry");
  }
}

}  // namespace

IntegralFile read_fcidump(std::istream& in) {
  IntegralFile out;
  std::string line;
  std::size_t line_no = 0;
  bool have_norb = false;
  std::vector<Record> records;

  std::streampos start = in.tellg();
  std::string first;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      first = line;
      break;
    }
  }
  if (first.find('&') != std::string::npos) {
    std::string header = first;
    while (header.find("&END") == std::string::npos && header.find("/") == std::string::npos) {
      if (!std::getline(in, line)) throw ParseError("unterminated header", line_no);
      ++line_no;
      header += " " + line;
    }
    std::smatch m;
    if (std::regex_search(header, m, std::regex(R"(NORB\s*=\s*(\d+))", std::regex::icase))) {
      out.num_orbitals = std::stoul(m[1]);
      have_norb = true;
    }
    if (std::regex_search(header, m, std::regex(R"(NELEC\s*=\s*(\d+))", std::regex::icase))) {
      out.num_electrons = std::stoul(m[1]);
    }
  } else if (!first.empty()) {
    in.clear();
    in.seekg(start);
    line_no = 0;
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Record r{};
    long long idx[4];
    if (!(ls >> r.value >> idx[0] >> idx[1] >> idx[2] >> idx[3])) {
      throw ParseError("malformed record '" + line + "'", line_no);
    }
    std::string rest;
    if (ls >> rest) throw ParseError("trailing text in record '" + line + "'", line_no);
    for (long long v : idx) {
      if (v < 0) throw ParseError("negative orbital index", line_no);
    }
    r.i = static_cast<std::size_t>(idx[0]);
    r.j = static_cast<std::size_t>(idx[1]);
    r.k = static_cast<std::size_t>(idx[2]);
    r.l = static_cast<std::size_t>(idx[3]);
    r.line = line_no;
    const bool one_body = r.k == 0 && r.l == 0;
    if ((r.i == 0) != (r.j == 0) || (!one_body && (r.k == 0 || r.l == 0)) ||
        (one_body && r.i == 0 && (r.k != 0 || r.l != 0))) {
      throw ParseError("record mixes zero and non-zero indices", line_no);
    }
    if (!have_norb) out.num_orbitals = std::max({out.num_orbitals, r.i, r.j, r.k, r.l});
    records.push_back(r);
  }

  const std::size_t n = out.num_orbitals;
  out.one_body = Matrix(n, n);
  out.two_body = Tensor4(n);
  std::map<std::pair<std::size_t, std::size_t>, double> seen1;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, double> seen2;
  bool have_constant = false;
  for (const auto& r : records) {
    if (r.i > n || r.j > n || r.k > n || r.l > n) throw ParseError("orbital index exceeds NORB", r.line);
    if (r.i == 0) {
      if (have_constant && std::abs(out.constant - r.value) > kConflictTolerance) {
        throw ValidationError("constant given twice with different values (line " +
                              std::to_string(r.line) + ")");
      }
      out.constant = r.value;
      have_constant = true;
    } else if (r.k == 0) {
      const std::size_t i = r.i - 1, j = r.j - 1;
      store_checked(seen1, {std::min(i, j), std::max(i, j)}, r.value, r.line);
      out.one_body(i, j) = out.one_body(j, i) = r.value;
    } else {
      std::size_t i = r.i - 1, j = r.j - 1, k = r.k - 1, l = r.l - 1;
      auto a = std::pair(std::min(i, j), std::max(i, j));
      auto b = std::pair(std::min(k, l), std::max(k, l));
      if (b < a) std::swap(a, b);
      store_checked(seen2, {a.first, a.second, b.first, b.second}, r.value, r.line);
      auto& e = out.two_body;
      e(i, j, k, l) = e(j, i, k, l) = e(i, j, l, k) = e(j, i, l, k) = r.value;
      e(k, l, i, j) = e(l, k, i, j) = e(k, l, j, i) = e(l, k, j, i) = r.value;
    }
  }
  return out;
}

IntegralFile read_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_fcidump(in);
}

void write_fcidump(std::ostream& out, const IntegralFile& data, double threshold) {
  const std::size_t n = data.num_orbitals;
  out << "&FCI NORB=" << n << ",NELEC=" << data.num_electrons << ",MS2=0,\n";
  out << "ORBSYM=";
  for (std::size_t i = 0; i < n; ++i) out << "1,";
  out << "\nISYM=1,\n&END\n";
  out << std::setprecision(17);
  auto emit = [&](double v, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    out << v << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = data.two_body(i, j, k, l);
          if (std::abs(v) > threshold && v != 0.0) emit(v, i + 1, j + 1, k + 1, l + 1);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = data.one_body(i, j);
      if (std::abs(v) > threshold && v != 0.0) emit(v, i + 1, j + 1, 0, 0);
    }
  }
  emit(data.constant, 0, 0, 0, 0);
}

void write_fcidump(const std::filesystem::path& path, const IntegralFile& data,
                   double threshold) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_fcidump(out, data, threshold);
}

}  // namespace superfast
