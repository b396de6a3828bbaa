// Command-line front end. Placeholder until the driver lands.
#include <cstdio>

int main() {
    std::puts("brun: not wired up yet");
    return 1;
}
