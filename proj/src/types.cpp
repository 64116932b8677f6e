#include "kr/types.hpp"

#include <cctype>

namespace kr {

int AffineType::twist() const {
  switch (family) {
    case Family::A2Even:
    case Family::A2EvenDag:
    case Family::A2Odd:
    case Family::D2:
    case Family::E62:
      return 2;
    case Family::D43:
      return 3;
    default:
      return 1;
  }
}

int AffineType::label() const {
  switch (family) {
    case Family::A2Even:
    case Family::A2EvenDag:
      return 2 * n;
    case Family::A2Odd:
      return 2 * n - 1;
    case Family::D2:
      return n + 1;
    case Family::E62:
      return 6;
    case Family::D43:
      return 4;
    default:
      return n;
  }
}

bool AffineType::simply_laced() const {
  switch (family) {
    case Family::A1:
    case Family::D1:
    case Family::E61:
    case Family::E71:
    case Family::E81:
      return true;
    default:
      return false;
  }
}

bool AffineType::nonexceptional() const {
  switch (family) {
    case Family::A1:
    case Family::B1:
    case Family::C1:
    case Family::D1:
    case Family::A2Even:
    case Family::A2EvenDag:
    case Family::A2Odd:
    case Family::D2:
      return true;
    default:
      return false;
  }
}

void AffineType::validate() const {
  int min = 0;
  int exact = 0;
  switch (family) {
    case Family::A1: min = 1; break;
    case Family::B1: min = 3; break;
    case Family::C1: min = 2; break;
    case Family::D1: min = 4; break;
    case Family::E61: exact = 6; break;
    case Family::E71: exact = 7; break;
    case Family::E81: exact = 8; break;
    case Family::F41: exact = 4; break;
    case Family::G21: exact = 2; break;
    case Family::A2Even: min = 1; break;
    case Family::A2EvenDag: min = 1; break;
    case Family::A2Odd: min = 3; break;
    case Family::D2: min = 2; break;
    case Family::E62: exact = 4; break;
    case Family::D43: exact = 2; break;
  }
  if (exact != 0) {
    if (n != exact)
      throw UnsupportedType("affine type " + str() + ": rank must be " + std::to_string(exact));
  } else if (n < min) {
    throw UnsupportedType("affine type " + str() + ": rank below family minimum " + std::to_string(min));
  }
}

std::string AffineType::str() const {
  char letter = 0;
  switch (family) {
    case Family::A1:
    case Family::A2Even:
    case Family::A2EvenDag:
    case Family::A2Odd: letter = 'A'; break;
    case Family::B1: letter = 'B'; break;
    case Family::C1: letter = 'C'; break;
    case Family::D1:
    case Family::D2:
    case Family::D43: letter = 'D'; break;
    case Family::E61:
    case Family::E71:
    case Family::E81:
    case Family::E62: letter = 'E'; break;
    case Family::F41: letter = 'F'; break;
    case Family::G21: letter = 'G'; break;
  }
  std::string s(1, letter);
  s += std::to_string(label());
  s += '~';
  s += std::to_string(twist());
  if (family == Family::A2EvenDag) s += "dag";
  return s;
}

AffineType AffineType::parse(const std::string& s) {
  auto fail = [&]() -> AffineType {
    throw UnsupportedType("cannot parse affine type \"" + s + "\"");
  };
  if (s.size() < 4) fail();
  char letter = s[0];
  size_t pos = 1;
  size_t digits = 0;
  while (pos + digits < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + digits]))) digits++;
  if (digits == 0) fail();
  int label = std::stoi(s.substr(pos, digits));
  pos += digits;
  if (pos >= s.size() || s[pos] != '~') fail();
  pos++;
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail();
  int r = s[pos] - '0';
  pos++;
  bool dag = false;
  if (pos < s.size()) {
    if (s.substr(pos) == "dag") dag = true;
    else fail();
  }

  Family fam;
  int n;
  if (letter == 'A' && r == 1 && !dag) { fam = Family::A1; n = label; }
  else if (letter == 'B' && r == 1 && !dag) { fam = Family::B1; n = label; }
  else if (letter == 'C' && r == 1 && !dag) { fam = Family::C1; n = label; }
  else if (letter == 'D' && r == 1 && !dag) { fam = Family::D1; n = label; }
  else if (letter == 'E' && r == 1 && !dag && label == 6) { fam = Family::E61; n = 6; }
  else if (letter == 'E' && r == 1 && !dag && label == 7) { fam = Family::E71; n = 7; }
  else if (letter == 'E' && r == 1 && !dag && label == 8) { fam = Family::E81; n = 8; }
  else if (letter == 'F' && r == 1 && !dag && label == 4) { fam = Family::F41; n = 4; }
  else if (letter == 'G' && r == 1 && !dag && label == 2) { fam = Family::G21; n = 2; }
  else if (letter == 'A' && r == 2 && label % 2 == 0) { fam = dag ? Family::A2EvenDag : Family::A2Even; n = label / 2; }
  else if (letter == 'A' && r == 2 && !dag) { fam = Family::A2Odd; n = (label + 1) / 2; }
  else if (letter == 'D' && r == 2 && !dag) { fam = Family::D2; n = label - 1; }
  else if (letter == 'E' && r == 2 && !dag && label == 6) { fam = Family::E62; n = 4; }
  else if (letter == 'D' && r == 3 && !dag && label == 4) { fam = Family::D43; n = 2; }
  else return fail();

  return make_type(fam, n);
}

}  // namespace kr
