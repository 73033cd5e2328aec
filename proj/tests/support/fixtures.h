// Shared source fixtures.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "flowgraph/frontend.h"

namespace flowgraph::testing {

// The two-if example program, statements 0..10 (both arms of the first if
// really are `z = y + 2`).
inline constexpr const char* kProgA = R"(public class TestProgram {
    public static void main(String[] args) {
        int x = 3;
        int y = 4;
        int z = 0;
        if (x > y)
            z = y + 2;
        else
            z = y + 2;
        z = z + y;
        if (y > 5)
            z = z + 5;
        else
            z = z - 2;
        z = z + 3;
    }
}
)";

// Three chained assignments, with declarations so every read has a definition.
inline constexpr const char* kProgB = R"(public class Dependencies {
    public static void main(String[] args) {
        int a = 0;
        int b = 1;
        int c = 2;
        a = b;
        b = c;
        c = a + b;
    }
}
)";

// 0: int x = 2;  1: while header  2: x = x - 1;
inline constexpr const char* kCountdown = R"(class Countdown {
  public static void main(String[] args) {
    int x = 2;
    while (x > 0) x = x - 1;
  }
})";

/// Wraps statements in the class/main boilerplate.
inline std::string wrap_main(const std::string& body) {
  return "class T { public static void main(String[] args) { " + body + " } }";
}

inline NumberedProgram load(const std::string& source) { return load_program(source); }

inline std::string fixture_path(const std::string& name) {
  return std::string(FLOWGRAPH_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace flowgraph::testing
