#include "warp_lis/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <json.hpp>

namespace warp_lis {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::empty_series, "time series must be nonempty");
}

TimeSeries TimeSeries::concat(const TimeSeries& tail) const {
  std::vector<double> joined = values_;
  joined.insert(joined.end(), tail.values_.begin(), tail.values_.end());
  return TimeSeries(std::move(joined));
}

namespace {

double parse_number(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw Error(Errc::malformed_number, "malformed number: '" + std::string(token) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_csv(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    while (!line.empty()) {
      const auto comma = line.find(',');
      const std::string_view field = trim(line.substr(0, comma));
      if (comma == std::string_view::npos) {
        if (!field.empty()) out.push_back(parse_number(field));
        break;
      }
      if (field.empty()) throw Error(Errc::malformed_number, "empty field in CSV input");
      out.push_back(parse_number(field));
      line = line.substr(comma + 1);
    }
  }
  return out;
}

std::vector<double> json_numbers(const nlohmann::json& array, const char* what) {
  if (!array.is_array()) {
    throw Error(Errc::malformed_number, std::string(what) + " must be a JSON array");
  }
  std::vector<double> out;
  out.reserve(array.size());
  for (const auto& v : array) {
    if (!v.is_number()) {
      throw Error(Errc::malformed_number, std::string(what) + " contains a non-numeric entry");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::malformed_number, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

TimeSeries parse_time_series(std::string_view text, SeriesFormat format) {
  std::vector<double> values;
  if (format == SeriesFormat::csv) {
    values = parse_csv(text);
  } else {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      throw Error(Errc::empty_series, "time series must be nonempty");
    }
    values = json_numbers(parse_json_text(text), "series");
  }
  return TimeSeries(std::move(values));
}

RealGrid parse_matrix_json(std::string_view text) {
  const auto doc = parse_json_text(text);
  if (!doc.is_array() || doc.empty()) {
    throw Error(Errc::matrix_dimension_mismatch, "matrix must be a nonempty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(doc.size());
  Eigen::Index cols = -1;
  RealGrid grid;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto row = json_numbers(doc[static_cast<std::size_t>(i)], "matrix row");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      if (cols == 0) throw Error(Errc::matrix_dimension_mismatch, "matrix rows must be nonempty");
      grid.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(Errc::matrix_dimension_mismatch, "matrix rows have different lengths");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double v = row[static_cast<std::size_t>(j)];
      if (!(v >= 0)) throw Error(Errc::invalid_argument, "matrix entries must be nonnegative");
      grid(i, j) = v;
    }
  }
  return grid;
}

std::int64_t round_half_up(double x) { return static_cast<std::int64_t>(std::floor(x + 0.5)); }

DissimilarityTable DissimilarityTable::from_ints(IntGrid d, std::optional<std::int64_t> cap) {
  if (d.size() == 0) throw Error(Errc::matrix_dimension_mismatch, "empty dissimilarity grid");
  if (d.minCoeff() < 0) throw Error(Errc::invalid_argument, "dissimilarities must be nonnegative");
  RealGrid real = d.cast<double>();
  return from_reals(std::move(real), cap);
}

DissimilarityTable DissimilarityTable::from_reals(RealGrid real, std::optional<std::int64_t> cap) {
  if (real.size() == 0) throw Error(Errc::matrix_dimension_mismatch, "empty dissimilarity grid");
  if (!real.allFinite() || real.minCoeff() < 0.0) {
    throw Error(Errc::invalid_argument, "dissimilarities must be finite and nonnegative");
  }
  if (cap && *cap < 0) throw Error(Errc::invalid_argument, "cap must be nonnegative");

  DissimilarityTable t;
  t.d_ = real.unaryExpr([](double x) { return round_half_up(x); });
  const std::int64_t observed = t.d_.maxCoeff();
  t.c_ = cap.value_or(observed);
  if (observed > t.c_) {
    const auto clamped = (t.d_.array() > t.c_).count();
    t.warnings_.push_back(std::to_string(clamped) + " dissimilarities exceed cap " +
                          std::to_string(t.c_) + " and were clamped");
    t.d_ = t.d_.cwiseMin(t.c_);
  }
  t.real_c_ = std::max(real.maxCoeff(), cap ? static_cast<double>(*cap) : 0.0);
  t.real_d_ = std::move(real);
  return t;
}

DissimilarityTable DissimilarityTable::with_cap(std::int64_t cap) const {
  if (cap < d_.maxCoeff()) {
    throw Error(Errc::invalid_argument, "cap must be at least the maximum dissimilarity");
  }
  DissimilarityTable t = *this;
  t.c_ = cap;
  t.real_c_ = std::max(real_d_.maxCoeff(), static_cast<double>(cap));
  return t;
}

DissimilarityTable DissimilarityTable::tile_rows(int times) const {
  if (times < 1) throw Error(Errc::invalid_argument, "tile count must be positive");
  DissimilarityTable t = *this;
  t.d_ = d_.replicate(times, 1);
  t.real_d_ = real_d_.replicate(times, 1);
  return t;
}

DissimilarityTable build_dissimilarity(const TimeSeries& a, const TimeSeries& b,
                                       const DissimilaritySpec& spec) {
  const auto m = static_cast<Eigen::Index>(a.size());
  const auto n = static_cast<Eigen::Index>(b.size());
  RealGrid real(m, n);
  switch (spec.kind) {
    case DissimilarityKind::absolute_difference:
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          real(i, j) = std::abs(a.values()[i] - b.values()[j]);
      break;
    case DissimilarityKind::squared_difference:
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          const double diff = a.values()[i] - b.values()[j];
          real(i, j) = diff * diff;
        }
      break;
    case DissimilarityKind::explicit_matrix:
      if (spec.matrix.rows() != m || spec.matrix.cols() != n) {
        throw Error(Errc::matrix_dimension_mismatch,
                    "explicit matrix is " + std::to_string(spec.matrix.rows()) + "x" +
                        std::to_string(spec.matrix.cols()) + ", series are " + std::to_string(m) +
                        "x" + std::to_string(n));
      }
      real = spec.matrix;
      break;
  }
  return DissimilarityTable::from_reals(std::move(real), spec.cap_override);
}

void check_subrange(const SubRange& r, int m, int n) {
  if (r.i_first < 1 || r.i_first > r.i_last || r.i_last > m || r.j_first < 1 ||
      r.j_first > r.j_last || r.j_last > n) {
    throw Error(Errc::out_of_range,
                "subrange A[" + std::to_string(r.i_first) + ":" + std::to_string(r.i_last) +
                    "], B[" + std::to_string(r.j_first) + ":" + std::to_string(r.j_last) +
                    "] outside " + std::to_string(m) + "x" + std::to_string(n));
  }
}

bool is_valid_alignment(const std::vector<std::pair<int, int>>& pairs, const SubRange& r) {
  if (pairs.empty()) return false;
  if (pairs.front() != std::pair{r.i_first, r.j_first}) return false;
  if (pairs.back() != std::pair{r.i_last, r.j_last}) return false;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const int di = pairs[k].first - pairs[k - 1].first;
    const int dj = pairs[k].second - pairs[k - 1].second;
    const bool ok = (di == 1 && dj == 1) || (di == 1 && dj == 0) || (di == 0 && dj == 1);
    if (!ok) return false;
  }
  return true;
}

}  // namespace warp_lis
