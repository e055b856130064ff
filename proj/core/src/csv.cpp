#include "ptwalk/csv.hpp"

#include <cstdio>
#include <fstream>

namespace ptwalk {

namespace {

std::string fmt12(double x) {
  if (x == 0.0) x = 0.0;  // never print "-0"
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void append_opt(std::string& out, const std::optional<double>& v) {
  out += v ? fmt12(*v) : "NA";
}

}  // namespace

std::string render_csv(const SweepResult& result) {
  std::string out =
      "alpha,beta,t,l1,l2,D,S,surviving_norm,W,gap_zero,gap_pi,pt_phase\n";
  for (const SweepRow& row : result.rows) {
    out += fmt12(row.alpha_pi);
    out += ',';
    out += fmt12(row.beta_pi);
    out += ',';
    out += row.t ? std::to_string(*row.t) : "NA";
    out += ',';
    out += fmt12(row.l1);
    out += ',';
    out += fmt12(row.l2);
    out += ',';
    append_opt(out, row.diffusion);
    out += ',';
    append_opt(out, row.entropy_bits);
    out += ',';
    append_opt(out, row.surviving_norm);
    out += ',';
    out += row.winding ? std::to_string(*row.winding) : "NA";
    out += ',';
    out += fmt12(row.gap_zero);
    out += ',';
    out += fmt12(row.gap_pi);
    out += ',';
    out += row.pt_phase ? to_string(*row.pt_phase) : "NA";
    out += '\n';
  }
  return out;
}

void emit_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  const std::string doc = render_csv(result);
  file.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  file.flush();
  if (!file) {
    throw IoError("write failed for '" + path.string() + "'");
  }
}

}  // namespace ptwalk
