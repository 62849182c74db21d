# Command modules package: one module per command family
