#include <iostream>

int main() {
    std::cout << "hharm6: placeholder\n";
    return 0;
}
