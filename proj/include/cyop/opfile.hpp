#pragma once

#include <iosfwd>
#include <map>

#include "cyop/recurrence.hpp"

namespace cyop {

/// Parsed operator/recurrence/sequence document. The on-disk format is JSON:
///   { "name": ..., "form": "theta",      "coeffs": [[q_ij ...] ...] }
///   { "name": ..., "form": "dz",         "coeffs": [{"num": [...], "den": [...]} ...] }
///   { "name": ..., "form": "recurrence", "coeffs": [[p_i coefficients] ...] }
///   { "name": ..., "form": "sequence",   "values": [ ... ] }
/// Rational entries are JSON integers when they fit exactly in 53 bits and
/// "p/q" strings otherwise, so files stay exact and human-diffable.
struct OpDocument {
  std::string name;
  std::string form;
  std::optional<ThetaOperator> op;   // theta and dz forms (dz is converted)
  std::optional<Recurrence> rec;     // recurrence form
  std::optional<Sequence> seq;       // sequence form
  std::map<std::string, std::string> meta;
};

OpDocument parse_opfile(const std::string& text);
OpDocument load_opfile(const std::string& path);

std::string serialize_operator(const std::string& name, const ThetaOperator& op,
                               const std::map<std::string, std::string>& meta = {});
std::string serialize_dz(const std::string& name, const DzOperator& op,
                         const std::map<std::string, std::string>& meta = {});
std::string serialize_recurrence(const std::string& name, const Recurrence& rec,
                                 const std::map<std::string, std::string>& meta = {});
std::string serialize_sequence(const Sequence& seq, const std::map<std::string, std::string>& meta = {});

/// Directory with the shipped case library (compile-time default, overridable
/// via the CYOP_DATA environment variable).
std::string data_dir();

}  // namespace cyop
