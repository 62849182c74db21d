# Middleware package: exception to exit-code mapping
