#include <cstdio>

int main() {
  std::puts("qmirror: placeholder");
  return 0;
}
