from twincity.main import main

raise SystemExit(main())
