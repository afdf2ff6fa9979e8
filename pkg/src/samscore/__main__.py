from samscore.cli import main

raise SystemExit(main())
