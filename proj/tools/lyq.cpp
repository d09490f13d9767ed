#include <iostream>

int main() {
  std::cout << "lyq: not wired up yet\n";
  return 0;
}
