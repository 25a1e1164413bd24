#include "records.hpp"

#include <sstream>

namespace perfover::cli {

namespace {

// Combining overline, applied per digit in unicode mode.
const char* kOverline = "\xCC\x85";  // U+0305

std::string overlined_digits(std::uint64_t part) {
  std::string digits = std::to_string(part);
  std::string out;
  for (char c : digits) {
    out += c;
    out += kOverline;
  }
  return out;
}

std::string group_token(std::uint64_t part, std::uint64_t mult, bool overlined, bool unicode) {
  // An overlined group renders its final copy separately: (3,2,overlined)
  // becomes "3,3~" so the overline sits on the last occurrence.
  std::string out;
  const std::uint64_t plain = mult - (overlined ? 1 : 0);
  if (plain >= 1) {
    out += std::to_string(part);
    if (plain > 1) out += "^" + std::to_string(plain);
  }
  if (overlined) {
    if (!out.empty()) out += ",";
    out += unicode ? overlined_digits(part) : std::to_string(part) + "~";
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_factors(const std::vector<std::uint64_t>& factors, bool unicode) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += unicode ? "\xC2\xB7" : "*";  // middle dot or ASCII star
    out += std::to_string(factors[i]);
  }
  return out;
}

std::string render_partition(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.groups().size(); ++i) {
    if (i > 0) out += ",";
    out += group_token(p.groups()[i].part, p.groups()[i].multiplicity, false, false);
  }
  return out + ")";
}

std::string render_overpartition(const Overpartition& o, bool unicode) {
  std::string out = "(";
  for (std::size_t i = 0; i < o.groups().size(); ++i) {
    if (i > 0) out += ",";
    const auto& g = o.groups()[i];
    out += group_token(g.part, g.multiplicity, g.overlined, unicode);
  }
  return out + ")";
}

json partition_groups_json(const Partition& p) {
  json groups = json::array();
  for (const auto& g : p.groups())
    groups.push_back({{"part", g.part}, {"multiplicity", g.multiplicity}});
  return groups;
}

json overpartition_groups_json(const Overpartition& o) {
  json groups = json::array();
  for (const auto& g : o.groups())
    groups.push_back(
        {{"part", g.part}, {"multiplicity", g.multiplicity}, {"overlined", g.overlined}});
  return groups;
}

namespace {

std::string partition_text_from_json(const json& groups) {
  std::string out = "(";
  bool first = true;
  for (const auto& g : groups) {
    if (!first) out += ",";
    first = false;
    out += group_token(g["part"].get<std::uint64_t>(), g["multiplicity"].get<std::uint64_t>(),
                       g.value("overlined", false), false);
  }
  return out + ")";
}

}  // namespace

void Emitter::flush(bool bfile) {
  bool first = true;
  for (const auto& rec : records_) {
    if (bfile && rec["kind"] == "seq_term") {
      out_ << rec["index"].get<std::uint64_t>() << " " << rec["value"].get<std::uint64_t>()
           << "\n";
      continue;
    }
    switch (opts_.format) {
      case Format::Json:
        out_ << rec.dump() << "\n";
        break;
      case Format::Csv:
        write_csv(rec, first);
        break;
      case Format::Plain:
        write_plain(rec);
        break;
    }
    first = false;
  }
  out_.flush();
}

void Emitter::write_plain(const json& rec) {
  const std::string kind = rec["kind"];
  if (kind == "count") {
    std::string args = std::to_string(rec["n"].get<std::uint64_t>());
    if (rec.contains("k")) args += ", k=" + std::to_string(rec["k"].get<std::uint64_t>());
    if (rec.contains("v")) args += ", v=" + std::to_string(rec["v"].get<std::uint64_t>());
    if (rec.contains("r")) args += ", r=" + std::to_string(rec["r"].get<std::uint64_t>());
    out_ << rec["function"].get<std::string>() << "(" << args
         << ") = " << rec["value"].get<std::uint64_t>() << "  ["
         << rec["path"].get<std::string>() << "]\n";
    if (rec.contains("alternatives")) {
      for (const auto& alt : rec["alternatives"]) {
        out_ << "  " << alt["value"].get<std::uint64_t>() << "  ["
             << alt["path"].get<std::string>() << "]\n";
      }
      out_ << (rec["agree"].get<bool>() ? "  all paths agree\n" : "  PATH MISMATCH\n");
    }
  } else if (kind == "factorization") {
    out_ << render_factors(rec["factors"].get<std::vector<std::uint64_t>>(), opts_.unicode)
         << "\n";
  } else if (kind == "partition") {
    out_ << partition_text_from_json(rec["groups"]) << "\n";
  } else if (kind == "overpartition") {
    std::string text = "(";
    bool first_group = true;
    for (const auto& g : rec["groups"]) {
      if (!first_group) text += ",";
      first_group = false;
      text += group_token(g["part"].get<std::uint64_t>(),
                          g["multiplicity"].get<std::uint64_t>(),
                          g["overlined"].get<bool>(), opts_.unicode);
    }
    out_ << text << ")\n";
  } else if (kind == "table_row") {
    const std::string table = rec["table"];
    if (rec.contains("label")) {
      out_ << rec["label"].get<std::string>() << " = " << rec["value"].get<std::uint64_t>()
           << "\n";
    } else if (table == "t3") {
      out_ << rec["n"].get<std::uint64_t>() << " |";
      for (const auto& c : rec["counts"]) out_ << " " << c.get<std::uint64_t>();
      out_ << " | " << rec["total"].get<std::uint64_t>() << "\n";
    } else if (table == "t2" && rec.contains("v")) {
      out_ << rec["v"].get<std::uint64_t>() << " | "
           << rec["no_higher_pow2"].get<std::uint64_t>() << " "
           << rec["higher_pow2_only"].get<std::uint64_t>() << " "
           << rec["mixed_even"].get<std::uint64_t>() << " | "
           << rec["total"].get<std::uint64_t>() << "\n";
    } else if (table == "t2" && rec.contains("r")) {
      out_ << rec["r"].get<std::uint64_t>() << " | " << rec["pop"].get<std::uint64_t>()
           << "\n";
    } else if (table == "t1") {
      out_ << render_factors(rec["factorization"].get<std::vector<std::uint64_t>>(),
                             opts_.unicode)
           << " -> " << partition_text_from_json(rec["partition"]) << "\n";
    }
  } else if (kind == "seq_term") {
    out_ << rec["sequence"].get<std::string>() << "(" << rec["index"].get<std::uint64_t>()
         << ") = " << rec["value"].get<std::uint64_t>() << "\n";
  } else if (kind == "check_result") {
    out_ << (rec["passed"].get<bool>() ? "[PASS] " : "[FAIL] ")
         << rec["check"].get<std::string>() << " (" << rec["cases"].get<std::uint64_t>()
         << " cases)";
    if (rec.contains("counterexample"))
      out_ << " counterexample: " << rec["counterexample"].get<std::string>();
    out_ << "\n";
  }
}

void Emitter::write_csv(const json& rec, bool first) {
  const std::string kind = rec["kind"];
  auto field_u64 = [&rec](const char* name) -> std::string {
    return rec.contains(name) ? std::to_string(rec[name].get<std::uint64_t>()) : "";
  };
  if (kind == "count") {
    if (first) out_ << "function,n,k,v,r,value,path\n";
    out_ << rec["function"].get<std::string>() << "," << field_u64("n") << ","
         << field_u64("k") << "," << field_u64("v") << "," << field_u64("r") << ","
         << field_u64("value") << "," << rec["path"].get<std::string>() << "\n";
    if (rec.contains("alternatives")) {
      for (const auto& alt : rec["alternatives"]) {
        out_ << rec["function"].get<std::string>() << "," << field_u64("n") << ","
             << field_u64("k") << "," << field_u64("v") << "," << field_u64("r") << ","
             << alt["value"].get<std::uint64_t>() << "," << alt["path"].get<std::string>()
             << "\n";
      }
    }
  } else if (kind == "factorization") {
    if (first) out_ << "product,factors\n";
    out_ << rec["product"].get<std::uint64_t>() << ","
         << render_factors(rec["factors"].get<std::vector<std::uint64_t>>(), false) << "\n";
  } else if (kind == "partition") {
    if (first) out_ << "weight,partition\n";
    out_ << rec["weight"].get<std::uint64_t>() << ","
         << csv_escape(partition_text_from_json(rec["groups"])) << "\n";
  } else if (kind == "overpartition") {
    if (first) out_ << "weight,r,overpartition\n";
    std::string text = "(";
    bool first_group = true;
    for (const auto& g : rec["groups"]) {
      if (!first_group) text += ",";
      first_group = false;
      text += group_token(g["part"].get<std::uint64_t>(),
                          g["multiplicity"].get<std::uint64_t>(),
                          g["overlined"].get<bool>(), false);
    }
    text += ")";
    out_ << rec["weight"].get<std::uint64_t>() << "," << rec["r"].get<std::uint64_t>() << ","
         << csv_escape(text) << "\n";
  } else if (kind == "table_row") {
    const std::string table = rec["table"];
    if (table == "t3") {
      if (first) {
        out_ << "n";
        for (std::size_t r = 0; r < rec["counts"].size(); ++r) out_ << ",r" << r;
        out_ << ",total\n";
      }
      out_ << rec["n"].get<std::uint64_t>();
      for (const auto& c : rec["counts"]) out_ << "," << c.get<std::uint64_t>();
      out_ << "," << rec["total"].get<std::uint64_t>() << "\n";
    } else if (table == "t2") {
      if (first) out_ << "section,index,no_higher_pow2,higher_pow2_only,mixed_even,total\n";
      if (rec.contains("v")) {
        out_ << "fv," << rec["v"].get<std::uint64_t>() << ","
             << rec["no_higher_pow2"].get<std::uint64_t>() << ","
             << rec["higher_pow2_only"].get<std::uint64_t>() << ","
             << rec["mixed_even"].get<std::uint64_t>() << ","
             << rec["total"].get<std::uint64_t>() << "\n";
      } else if (rec.contains("r")) {
        out_ << "pop," << rec["r"].get<std::uint64_t>() << ",,,,"
             << rec["pop"].get<std::uint64_t>() << "\n";
      } else {
        out_ << rec["label"].get<std::string>() << ",,,,," << rec["value"].get<std::uint64_t>()
             << "\n";
      }
    } else if (table == "t1") {
      if (first) out_ << "factorization,partition\n";
      out_ << render_factors(rec["factorization"].get<std::vector<std::uint64_t>>(), false)
           << "," << csv_escape(partition_text_from_json(rec["partition"])) << "\n";
    }
  } else if (kind == "seq_term") {
    if (first) out_ << "sequence,index,value\n";
    out_ << rec["sequence"].get<std::string>() << "," << rec["index"].get<std::uint64_t>()
         << "," << rec["value"].get<std::uint64_t>() << "\n";
  } else if (kind == "check_result") {
    if (first) out_ << "check,cases,passed,counterexample\n";
    out_ << rec["check"].get<std::string>() << "," << rec["cases"].get<std::uint64_t>() << ","
         << (rec["passed"].get<bool>() ? "true" : "false") << ","
         << csv_escape(rec.contains("counterexample")
                           ? rec["counterexample"].get<std::string>()
                           : "")
         << "\n";
  }
}

}  // namespace perfover::cli
