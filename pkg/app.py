"""gammaforge: Γ-sets, multivalued sums and extension of scalars to Z."""

from src.cli.main import main

if __name__ == "__main__":
    main()
