#include "elephant/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace elephant::io {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return {buf, end};
}

namespace {

json coeff_array(std::span<const Rational> coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(to_string(c));
  return arr;
}

std::vector<Rational> parse_coeff_array(const json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of coefficient strings");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("coefficients must be strings");
    out.push_back(parse_rational(c.get<std::string>()));
  }
  return out;
}

}  // namespace

json to_json(const DensePoly& p) { return coeff_array(p.coeffs()); }
json to_json(const PowerSeries& s) { return coeff_array(s.coeffs()); }

json to_json(const LaurentPoly& l) {
  json obj = json::object();
  for (const auto& [k, c] : l.terms()) obj[std::to_string(k)] = to_string(c);
  return obj;
}

DensePoly poly_from_json(const json& j) { return DensePoly(parse_coeff_array(j)); }

PowerSeries series_from_json(const json& j) { return PowerSeries(parse_coeff_array(j)); }

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object for a Laurent polynomial");
  LaurentPoly l;
  for (const auto& [key, value] : j.items()) {
    int k = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
    if (ec != std::errc{} || ptr != key.data() + key.size()) throw ParseError("bad exponent '" + key + "'");
    l.add(k, parse_rational(value.get<std::string>()));
  }
  return l;
}

json family_record(Family family, unsigned n, const std::optional<Rational>& a, const DensePoly& p) {
  return json{{"family", std::string(family_name(family))},
              {"n", n},
              {"a", a ? json(to_string(*a)) : json(nullptr)},
              {"coeffs", to_json(p)}};
}

json root_report(unsigned n, const Rational& a, const RootList& roots,
                 const std::optional<bool>& interlaced_with_next) {
  struct Entry {
    Rational key;
    json value;
  };
  std::vector<Entry> entries;
  for (const auto& iv : roots.intervals) {
    entries.push_back({iv.lo, json{{"lo", to_string(iv.lo)},
                                   {"hi", to_string(iv.hi)},
                                   {"mid_float", iv.mid_float()},
                                   {"exact", false}}});
  }
  for (const auto& r : roots.exact_roots) {
    entries.push_back({r, json{{"lo", to_string(r)}, {"hi", to_string(r)}, {"mid_float", r.get_d()}, {"exact", true}}});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.key < y.key; });
  json arr = json::array();
  for (auto& e : entries) arr.push_back(std::move(e.value));
  return json{{"n", n},
              {"a", to_string(a)},
              {"roots", std::move(arr)},
              {"interlaced_with_next", interlaced_with_next ? json(*interlaced_with_next) : json(nullptr)}};
}

json interlacing_to_json(const InterlacingReport& report) {
  json order = json::array();
  for (const auto& w : report.order) {
    order.push_back(json{{"list", w.list}, {"lo", to_string(w.lo)}, {"hi", to_string(w.hi)}, {"exact", w.exact}});
  }
  return json{{"interlaced", report.interlaced},
              {"vacuous", report.vacuous},
              {"bisections", report.bisections},
              {"note", report.note},
              {"order", std::move(order)}};
}

json distribution_to_json(const DistributionTable& table) {
  json rows = json::array();
  for (const auto& [k, p] : table.probs) {
    if (p == 0) continue;
    rows.push_back(json{{"k", k},
                        {"prob_num", p.get_num().get_str()},
                        {"prob_den", p.get_den().get_str()},
                        {"prob_float", p.get_d()}});
  }
  return json{{"n", table.n}, {"rows", std::move(rows)}};
}

DistributionTable distribution_from_json(const json& j) {
  DistributionTable table;
  table.n = j.at("n").get<unsigned>();
  const int n = static_cast<int>(table.n);
  for (int k = -n; k <= n; k += 2) table.probs[k] = 0;
  for (const auto& row : j.at("rows")) {
    Rational p(Integer(row.at("prob_num").get<std::string>()), Integer(row.at("prob_den").get<std::string>()));
    p.canonicalize();
    table.probs[row.at("k").get<int>()] = p;
  }
  return table;
}

void write_distribution_csv(std::ostream& out, const DistributionTable& table) {
  out << "k,prob_num,prob_den,prob_float\n";
  for (const auto& [k, p] : table.probs) {
    if (p == 0) continue;
    out << k << ',' << p.get_num().get_str() << ',' << p.get_den().get_str() << ','
        << format_double(p.get_d()) << '\n';
  }
}

json empirical_to_json(const EmpiricalTable& table) {
  json rows = json::array();
  for (const auto& [k, c] : table.counts) rows.push_back(json{{"k", k}, {"count", c}, {"freq", table.freq(k)}});
  return json{{"n", table.n}, {"samples", table.samples}, {"rows", std::move(rows)}};
}

void write_empirical_csv(std::ostream& out, const EmpiricalTable& table) {
  out << "k,count,freq\n";
  for (const auto& [k, c] : table.counts) out << k << ',' << c << ',' << format_double(table.freq(k)) << '\n';
}

void write_moments_csv_header(std::ostream& out) {
  out << "n,a,value_num,value_den,value_float,predicted_leading,ratio\n";
}

void write_moments_csv_row(std::ostream& out, const MomentRecord& record) {
  out << record.n << ',' << to_string(record.a) << ',' << record.value.get_num().get_str() << ','
      << record.value.get_den().get_str() << ',' << format_double(record.value.get_d()) << ',';
  const bool applies = record.n >= 2 && record.a >= 0 && record.a <= 1;
  if (applies) {
    const double predicted = predicted_leading(record.n, record.a);
    out << format_double(predicted) << ',' << format_double(record.value.get_d() / predicted);
  } else {
    out << ',';
  }
  out << '\n';
}

}  // namespace elephant::io
