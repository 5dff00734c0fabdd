#include "curvint/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace curvint::cli {

namespace {

void write_number(std::ostream& os, double x) {
  if (!std::isfinite(x)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  os << buf;
}

void write(std::ostream& os, const Json& v, int indent) {
  const std::string pad(static_cast<size_t>(indent + 2), ' ');
  const std::string close(static_cast<size_t>(indent), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        write(os, it.value(), indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write(os, v[i], indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float:
      write_number(os, v.get<double>());
      return;
    default:
      os << v.dump();
      return;
  }
}

}  // namespace

std::string dump_report(const Json& value) {
  std::ostringstream os;
  write(os, value, 0);
  os << "\n";
  return os.str();
}

Json to_json(const DegreeResult& degree) {
  Json j;
  j["raw"] = degree.raw;
  j["rounded"] = degree.rounded;
  j["residual"] = degree.residual;
  j["valid"] = degree.valid;
  j["error_estimate"] = degree.integral.error_estimate;
  return j;
}

Json to_json(const EtaCheck& row) {
  Json j;
  j["k"] = row.k;
  j["integral"] = row.integral;
  j["predicted"] = row.predicted;
  j["abs_dev"] = row.abs_dev;
  j["rel_dev"] = row.rel_dev;
  j["pass"] = row.pass;
  j["error_estimate"] = row.error_estimate;
  j["threshold"] = row.threshold;
  return j;
}

Json to_json(const MilnorReport& milnor, const std::vector<int>& betti) {
  Json j;
  j["d"] = milnor.d;
  j["betti"] = betti;
  j["beta"] = milnor.beta;
  j["parity"] = milnor.parity;
  j["bound"] = milnor.bound;
  j["oriented_bound"] = milnor.oriented_bound ? Json(*milnor.oriented_bound) : Json(nullptr);
  j["pass"] = milnor.all();
  return j;
}

Json to_json(const FoliationReport& f) {
  Json j;
  j["samples"] = f.samples.size();
  j["max_defect"] = f.max_defect;
  j["max_rank"] = f.max_rank;
  j["rank_limit"] = f.rank_limit;
  j["integrable"] = f.integrable;
  j["applicable"] = f.applicable;
  j["hypothesis"] = f.hypothesis;
  j["degree"] = f.degree ? Json(*f.degree) : Json(nullptr);
  j["implication_holds"] = f.implication_holds ? Json(*f.implication_holds) : Json(nullptr);
  std::vector<std::size_t> histogram(static_cast<size_t>(f.n + 1), 0);
  for (const auto& s : f.samples) ++histogram[static_cast<size_t>(s.rank)];
  j["rank_histogram"] = histogram;
  j["note"] = f.note;
  return j;
}

std::string verification_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "k,integral,predicted,abs_dev,rel_dev,pass\n";
  for (const auto& row : report.eta) {
    os << row.k;
    for (double x : {row.integral, row.predicted, row.abs_dev, row.rel_dev}) {
      os << ",";
      write_number(os, x);
    }
    os << "," << (row.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace curvint::cli
