from hvnfinite.cli import main

raise SystemExit(main())
