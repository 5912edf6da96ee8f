#pragma once

#include <string_view>

namespace shimura {

enum class Verdict { pass, fail, inconclusive };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

}  // namespace shimura
