from qubit_algebras.main import main

main()
