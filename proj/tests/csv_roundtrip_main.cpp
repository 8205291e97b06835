// Reads an emitted CSV, parses it and re-emits it; exits nonzero unless the
// bytes match. Used against files the command-line tool wrote.
#include <cstdio>
#include <string>

#include "birkhoff/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: csv_roundtrip <file.csv>\n");
    return 2;
  }
  try {
    const std::string original = birkhoff::read_file(argv[1]);
    const std::string reemitted =
        birkhoff::format_csv(birkhoff::parse_csv(original));
    if (original == reemitted) {
      std::printf("round trip is byte-identical (%zu bytes)\n",
                  original.size());
      return 0;
    }
    std::fprintf(stderr, "round trip differs: %zu vs %zu bytes\n",
                 original.size(), reemitted.size());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
