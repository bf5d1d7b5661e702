"""Two-block Springer representations of types C and D via cup diagrams."""
