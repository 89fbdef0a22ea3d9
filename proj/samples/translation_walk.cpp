// Walks t_{-lambda_s} for one type: reduced word, length-zero part, inversion roots
// in word order and the character exponents.
//
//   sample_translation D4~2 3

#include "loomfold/loomfold.hpp"

#include <iostream>

using namespace loomfold;

int main(int argc, char** argv) {
  const std::string type = argc > 1 ? argv[1] : "A5~2";
  const int s = argc > 2 ? std::stoi(argv[2]) : 1;
  try {
    const auto d = build_affine(parse_type(type));
    const auto f = alcove_factorize(d, translation_minus_lambda(d, s));
    std::cout << type << " node " << s << "\nword:";
    for (int i : f.word) std::cout << " " << i;
    std::cout << "\ntau:";
    for (int j : f.tau) std::cout << " " << j;
    std::cout << "\n\ninversion roots (alpha_0 first):\n";
    for (const auto& b : inversion_set_from_word(d, f.word)) std::cout << "  " << b.compact() << "\n";
    std::cout << "\nfactors (1 - e^-beta)^-e:\n";
    for (const auto& x : char_factors(d, s)) {
      std::cout << "  (";
      for (std::size_t k = 0; k < x.beta.size(); ++k) std::cout << (k ? "," : "") << x.beta[k];
      std::cout << ")  e=" << x.exponent << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
