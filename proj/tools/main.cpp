#include <iostream>

int main() {
    std::cout << "bturan: subcommands pending\n";
    return 2;
}
