// Writes the bundled datum files and the golden classification report.

#include <fstream>
#include <iostream>

#include "premod/classify.hpp"

using namespace premod;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  auto write = [&](const std::string& name, const std::string& payload) {
    std::ofstream f(dir + "/" + name, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << dir << "/" << name << "\n";
      exit(1);
    }
    f << payload;
    std::cerr << "wrote " << dir << "/" << name << "\n";
  };
  auto slug = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (isalnum(static_cast<unsigned char>(ch)))
        out += static_cast<char>(tolower(ch));
      else if (!out.empty() && out.back() != '_')
        out += '_';
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
  };
  for (const auto& entry : bundled_properly_premodular())
    write("datum_" + slug(entry.name) + ".json", canonical_dump(to_json(entry.datum, true)));
  for (const auto& entry : bundled_modular())
    write("datum_" + slug(entry.name) + ".json", canonical_dump(to_json(entry.datum, true)));
  auto report = classify_rank5(bundled_groups(60));
  write("golden_report.json", canonical_dump(report_to_json(report)));
  write("golden_report.txt", report_to_text(report));
  return 0;
}
